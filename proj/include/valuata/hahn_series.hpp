#pragma once

#include <optional>
#include <string>
#include <vector>

#include "valuata/residue_field.hpp"
#include "valuata/value_group.hpp"

namespace valuata {

struct Term {
  GroupElt exp;
  ResidueElt coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Truncated Hahn series: finitely many terms with strictly increasing
/// exponents, known modulo all terms of exponent >= precision. An absent
/// precision marks an exact finite sum.
class Series {
 public:
  const std::vector<Term>& terms() const { return terms_; }
  const std::optional<GroupElt>& precision() const { return precision_; }
  bool is_exact() const { return !precision_.has_value(); }
  bool has_terms() const { return !terms_.empty(); }
  bool is_exact_zero() const { return terms_.empty() && is_exact(); }
  const Term& leading() const { return terms_.front(); }

  friend bool operator==(const Series&, const Series&) = default;

 private:
  friend class SeriesField;
  std::vector<Term> terms_;
  std::optional<GroupElt> precision_;
};

/// The valued field K = k((X^Γ)) at finite precision. All arithmetic goes
/// through the field object; elements are plain values.
class SeriesField {
 public:
  SeriesField(ResidueField residue, ValueGroup group, GroupElt default_precision);

  const ResidueField& residue() const { return residue_; }
  const ValueGroup& group() const { return group_; }
  int p() const { return residue_.p(); }
  const GroupElt& default_precision() const { return default_precision_; }
  /// p-th roots need a p-divisible group and a perfect residue field.
  bool supports_pth_root() const { return group_.p_divisible() && residue_.is_perfect(); }
  std::string name() const;

  Series zero() const { return {}; }
  Series one() const { return constant(residue_.one()); }
  Series constant(const ResidueElt& c) const;
  Series from_int(long n) const { return constant(residue_.from_int(n)); }
  Series monomial(const ResidueElt& c, const GroupElt& exp) const;
  /// Sorts, merges equal exponents, drops zero coefficients and terms at or
  /// above the precision. Exponents must lie in the value group.
  Series from_terms(std::vector<Term> terms, std::optional<GroupElt> precision = std::nullopt) const;
  /// Drops terms at or above `prec` and caps the precision.
  Series truncate(const Series& a, const GroupElt& prec) const;

  Series add(const Series& a, const Series& b) const;
  Series sub(const Series& a, const Series& b) const;
  Series neg(const Series& a) const;
  Series mul(const Series& a, const Series& b) const;
  Series scale(const Series& a, const ResidueElt& c) const;
  Series scale(const Series& a, long n) const { return scale(a, residue_.from_int(n)); }
  /// Multiplication by the monomial c X^exp.
  Series shift(const Series& a, const ResidueElt& c, const GroupElt& exp) const;
  Series pow(const Series& a, unsigned e) const;

  /// Exponent of the least term; nullopt stands for +infinity (exact zero).
  /// Throws ZeroToPrecision if no term is known below the precision.
  std::optional<GroupElt> valuation(const Series& a) const;
  /// v(a) when known, otherwise the precision (a lower bound).
  std::optional<GroupElt> valuation_lower_bound(const Series& a) const;
  /// True when a - b has no terms below its precision.
  bool equal_to_precision(const Series& a, const Series& b) const;

  /// Inverse with a * inv = 1 + O(X^target); target defaults to the field
  /// precision.
  Series invert(const Series& a, std::optional<GroupElt> target = std::nullopt) const;
  Series divide(const Series& a, const Series& b, std::optional<GroupElt> target = std::nullopt) const {
    return mul(a, invert(b, target));
  }

  /// Coefficient at exponent 0; requires v(a) >= 0.
  ResidueElt residue_class(const Series& a) const;
  /// Lift of a residue along the exponent-0 section.
  Series lift(const ResidueElt& c) const { return constant(c); }

  /// Sum c_i X^(e_i) -> Sum c_i^p X^(p e_i).
  Series frobenius(const Series& a) const;
  std::optional<Series> pth_root(const Series& a) const;
  /// f + h^p - h.
  Series artin_schreier_shift(const Series& f, const Series& h) const;

  /// DSL text, e.g. "y*X^(-2) + X^(0)" or "X^(-1) + O(X^(4))".
  std::string str(const Series& a) const;

  friend bool operator==(const SeriesField& a, const SeriesField& b) {
    return a.residue_ == b.residue_ && a.group_ == b.group_ && a.default_precision_ == b.default_precision_;
  }

 private:
  Series normalize(std::vector<Term> terms, std::optional<GroupElt> precision) const;
  void require_exponent(const GroupElt& e) const;

  ResidueField residue_;
  ValueGroup group_;
  GroupElt default_precision_;
};

/// min of two precisions where nullopt means +infinity.
std::optional<GroupElt> min_precision(const std::optional<GroupElt>& a, const std::optional<GroupElt>& b);

}  // namespace valuata
