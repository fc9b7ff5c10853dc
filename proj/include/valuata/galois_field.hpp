#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace valuata {

/// Elements of GF(p^m) are encoded as integers in [0, q): the base-p digits are
/// the coefficients of the residue polynomial in w, lowest degree first.
using GFElt = std::uint32_t;

/// Finite field GF(q), q = p^m, with log/exp tables.
class GaloisField {
 public:
  /// `modulus` lists the coefficients (lowest first) of a monic irreducible
  /// polynomial of degree m over GF(p). Empty selects the built-in table.
  GaloisField(int p, int m, std::vector<int> modulus = {});

  static std::shared_ptr<const GaloisField> make(int p, int m, std::vector<int> modulus = {});
  /// GF(q) for a prime power q.
  static std::shared_ptr<const GaloisField> of_order(long q, std::vector<int> modulus = {});

  int p() const { return p_; }
  int degree() const { return m_; }
  std::uint32_t order() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  GFElt zero() const { return 0; }
  GFElt one() const { return 1; }
  GFElt from_int(long n) const;

  GFElt add(GFElt a, GFElt b) const;
  GFElt sub(GFElt a, GFElt b) const;
  GFElt neg(GFElt a) const;
  GFElt mul(GFElt a, GFElt b) const;
  GFElt inv(GFElt a) const;
  GFElt div(GFElt a, GFElt b) const { return mul(a, inv(b)); }
  GFElt pow(GFElt a, long long e) const;
  GFElt frobenius(GFElt a) const { return pow(a, p_); }

  /// r with r^p == c. Always exists since finite fields are perfect.
  GFElt pth_root(GFElt c) const;
  /// Absolute trace to GF(p), returned as an element of the prime field.
  GFElt trace(GFElt c) const;
  /// x with x^p - x == c, found by exhaustive search.
  std::optional<GFElt> artin_schreier_preimage(GFElt c) const;

  std::vector<int> digits(GFElt a) const;
  GFElt from_digits(const std::vector<int>& d) const;
  /// Integer for prime fields, polynomial in `w` otherwise.
  std::string str(GFElt a) const;

  friend bool operator==(const GaloisField& a, const GaloisField& b) {
    return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
  }

 private:
  GFElt mul_slow(GFElt a, GFElt b) const;

  int p_;
  int m_;
  std::uint32_t q_;
  std::vector<int> modulus_;
  std::vector<std::uint32_t> log_;
  std::vector<GFElt> exp_;
};

/// Default irreducible moduli (Conway polynomials) for the small non-prime
/// fields used throughout the examples.
std::optional<std::vector<int>> default_modulus(int p, int m);

/// Univariate polynomials over GF(q), lowest coefficient first, no trailing
/// zeros; the zero polynomial is empty.
using GFPoly = std::vector<GFElt>;

namespace gfpoly {

int degree(const GFPoly& a);
void trim(GFPoly& a);
GFPoly constant(GFElt c);
GFPoly monomial(GFElt c, int deg);
GFPoly add(const GaloisField& k, const GFPoly& a, const GFPoly& b);
GFPoly sub(const GaloisField& k, const GFPoly& a, const GFPoly& b);
GFPoly neg(const GaloisField& k, const GFPoly& a);
GFPoly scale(const GaloisField& k, const GFPoly& a, GFElt c);
GFPoly mul(const GaloisField& k, const GFPoly& a, const GFPoly& b);
GFPoly pow(const GaloisField& k, const GFPoly& a, unsigned e);
/// Quotient and remainder; throws DivisionByZero for b == 0.
std::pair<GFPoly, GFPoly> divmod(const GaloisField& k, const GFPoly& a, const GFPoly& b);
GFPoly monic(const GaloisField& k, const GFPoly& a);
GFPoly gcd(const GaloisField& k, GFPoly a, GFPoly b);
GFPoly derivative(const GaloisField& k, const GFPoly& a);
/// Coefficient-wise Frobenius: a(y)^p.
GFPoly frobenius(const GaloisField& k, const GFPoly& a);
/// r with r^p == a, present iff every exponent with a nonzero coefficient is
/// divisible by p.
std::optional<GFPoly> pth_root(const GaloisField& k, const GFPoly& a);
/// Square-free factorization of a monic polynomial: pairs (factor, multiplicity)
/// with pairwise coprime square-free monic factors.
std::vector<std::pair<GFPoly, int>> squarefree_factorization(const GaloisField& k, const GFPoly& a);
std::string str(const GaloisField& k, const GFPoly& a, const std::string& var);

}  // namespace gfpoly

}  // namespace valuata
