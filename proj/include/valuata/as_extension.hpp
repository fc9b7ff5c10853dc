#pragma once

#include <string>
#include <vector>

#include "valuata/hahn_series.hpp"

namespace valuata {

/// Element sum_i coeffs[i] * alpha^i of L = K[T]/(T^p - T - f), 0 <= i < p.
struct ExtElt {
  std::vector<Series> coeffs;
};

/// The Artin-Schreier extension L = K(alpha), alpha^p - alpha = f, with the
/// Galois generator sigma(alpha) = alpha + 1.
class ASExtension {
 public:
  ASExtension(SeriesField base, Series f);

  const SeriesField& base() const { return base_; }
  const Series& f() const { return f_; }
  int p() const { return base_.p(); }

  /// Set when f lies in the maximal ideal, or f is a unit whose residue lies
  /// in the Artin-Schreier image of k; such an f splits by Hensel's lemma.
  bool is_trivial() const { return trivial_; }
  const std::string& triviality_reason() const { return trivial_reason_; }

  ExtElt zero() const;
  ExtElt one() const { return from_base(base_.one()); }
  ExtElt alpha() const;
  ExtElt from_base(const Series& c) const;
  /// Pads or validates a coefficient vector of length <= p.
  ExtElt make(std::vector<Series> coeffs) const;

  ExtElt add(const ExtElt& a, const ExtElt& b) const;
  ExtElt sub(const ExtElt& a, const ExtElt& b) const;
  ExtElt neg(const ExtElt& a) const;
  ExtElt scale(const ExtElt& a, const Series& c) const;
  ExtElt mul(const ExtElt& a, const ExtElt& b) const;
  ExtElt pow(const ExtElt& a, unsigned e) const;

  /// alpha -> alpha + power, 0 <= power < p.
  ExtElt sigma(const ExtElt& a, int power) const;

  /// Product of sigma^i(a) for i = 1 .. p-1.
  ExtElt conjugate_cofactor(const ExtElt& a) const;
  /// Product of all conjugates; throws MathAssertion if a non-constant
  /// alpha-component survives.
  Series norm(const ExtElt& a) const;
  /// Sum of all conjugates.
  Series trace(const ExtElt& a) const;

  /// Matrix of multiplication by a on the basis 1, alpha, ..., alpha^(p-1);
  /// column j holds the coefficients of a * alpha^j.
  std::vector<std::vector<Series>> multiplication_matrix(const ExtElt& a) const;
  /// Norm as the determinant of the multiplication matrix (cofactor expansion).
  Series norm_by_determinant(const ExtElt& a) const;
  /// Trace as the sum of the diagonal of the multiplication matrix.
  Series trace_by_matrix(const ExtElt& a) const;

  /// The unique extension of v_K: v_K(norm(a)) / p, an element of (1/p)Γ.
  GroupElt valuation(const ExtElt& a) const;

  /// a * inv = 1 + O(X^target).
  ExtElt invert(const ExtElt& a, std::optional<GroupElt> target = std::nullopt) const;

  /// True when every alpha-component above index 0 is zero to precision.
  bool in_base(const ExtElt& a) const;
  bool equal_to_precision(const ExtElt& a, const ExtElt& b) const;
  bool is_zero_to_precision(const ExtElt& a) const;

  std::string str(const ExtElt& a) const;

 private:
  void require_nontrivial(const char* op) const;

  SeriesField base_;
  Series f_;
  bool trivial_ = false;
  std::string trivial_reason_;
};

}  // namespace valuata
