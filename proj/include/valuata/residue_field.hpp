#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "valuata/galois_field.hpp"

namespace valuata {

/// Element of the residue field. Finite-field elements are constants (num of
/// degree <= 0, den == 1); rational functions are reduced fractions with monic
/// denominator, so equality is representational.
struct ResidueElt {
  GFPoly num;
  GFPoly den{1};

  bool is_zero() const { return num.empty(); }
  friend bool operator==(const ResidueElt&, const ResidueElt&) = default;
};

enum class ResidueKind { Finite, RationalFunctions };

/// The residue field k: either GF(q) or the rational function field GF(q)(y).
class ResidueField {
 public:
  ResidueField() : ResidueField(GaloisField::make(2, 1), ResidueKind::Finite) {}
  ResidueField(std::shared_ptr<const GaloisField> base, ResidueKind kind);

  static ResidueField finite(long q) { return {GaloisField::of_order(q), ResidueKind::Finite}; }
  static ResidueField rational_functions(long q) {
    return {GaloisField::of_order(q), ResidueKind::RationalFunctions};
  }
  /// "gf:q" or "ratfunc:q".
  static ResidueField parse(std::string_view spec);

  ResidueKind kind() const { return kind_; }
  const GaloisField& base() const { return *base_; }
  const std::shared_ptr<const GaloisField>& base_ptr() const { return base_; }
  int p() const { return base_->p(); }
  bool is_perfect() const { return kind_ == ResidueKind::Finite; }
  std::string name() const;

  ResidueElt zero() const { return {{}, {1}}; }
  ResidueElt one() const { return {{1}, {1}}; }
  ResidueElt from_int(long n) const { return constant(base_->from_int(n)); }
  ResidueElt constant(GFElt c) const { return {gfpoly::constant(c), {1}}; }
  /// The indeterminate y; UsageError for finite fields.
  ResidueElt y() const;
  /// Reduces num/den to canonical form.
  ResidueElt fraction(GFPoly num, GFPoly den) const;

  ResidueElt add(const ResidueElt& a, const ResidueElt& b) const;
  ResidueElt sub(const ResidueElt& a, const ResidueElt& b) const;
  ResidueElt neg(const ResidueElt& a) const;
  ResidueElt mul(const ResidueElt& a, const ResidueElt& b) const;
  ResidueElt inv(const ResidueElt& a) const;
  ResidueElt div(const ResidueElt& a, const ResidueElt& b) const { return mul(a, inv(b)); }
  ResidueElt pow(const ResidueElt& a, long e) const;
  ResidueElt frobenius(const ResidueElt& a) const;

  /// r with r^p == c, when one exists in k.
  std::optional<ResidueElt> pth_root(const ResidueElt& c) const;

  struct ASPreimage {
    std::optional<ResidueElt> x;
    /// Degree bound used for the unknown numerator (rational functions only;
    /// 0 for finite fields, where the search is exhaustive).
    int degree_bound = 0;
  };
  /// Decides whether c lies in {x^p - x : x in k} and returns a witness.
  ASPreimage artin_schreier_solve(const ResidueElt& c) const;
  std::optional<ResidueElt> artin_schreier_preimage(const ResidueElt& c) const {
    return artin_schreier_solve(c).x;
  }

  std::string str(const ResidueElt& a) const;

  friend bool operator==(const ResidueField& a, const ResidueField& b) {
    return a.kind_ == b.kind_ && *a.base_ == *b.base_;
  }

 private:
  void check(const ResidueElt& a) const;

  std::shared_ptr<const GaloisField> base_;
  ResidueKind kind_;
};

}  // namespace valuata
