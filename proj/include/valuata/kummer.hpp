#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "valuata/best_f.hpp"
#include "valuata/residue_field.hpp"

namespace valuata {

/// Element of Z_p[pi] modulo p^N on the basis 1, pi, ..., pi^(n-1).
using PiPoly = std::vector<std::int64_t>;

/// pi^shift * (sum_k coeffs[k] y^k) where the polynomial has Gauss valuation 0
/// and is known modulo pi^rel. A zero has no coefficients and `shift` holds
/// its absolute precision, unless `exact` is set.
struct GaussPoly {
  long shift = 0;
  std::vector<PiPoly> coeffs;
  long rel = 0;
  bool exact = false;
  bool is_zero() const { return coeffs.empty(); }
  friend bool operator==(const GaussPoly&, const GaussPoly&) = default;
};

/// num / den with den of Gauss valuation 0. Fractions are not reduced;
/// comparisons go through subtraction.
struct CycloElt {
  GaussPoly num;
  GaussPoly den;
};

/// K = Q_p(zeta_p, pi), optionally extended by a Gauss-valued indeterminate y.
/// pi is a root of Phi_p(1 + pi^m), so z = zeta - 1 = pi^m, v(pi) = 1,
/// v(p) = n = m(p-1) and e' = m. Elements are known modulo p^N.
class CycloField {
 public:
  CycloField(int p, int m, bool with_y, int N = 0);

  /// Largest N with p^N < 2^62.
  static int max_precision(int p);

  int p() const { return p_; }
  int m() const { return m_; }
  int n() const { return n_; }
  bool with_y() const { return with_y_; }
  int padic_precision() const { return N_; }
  long e_prime() const { return m_; }
  /// Absolute precision of an integer input, n N.
  long precision_cap() const { return cap_; }
  const ResidueField& residue() const { return residue_; }
  std::string name() const;

  CycloElt zero() const;
  CycloElt one() const { return from_int(1); }
  CycloElt from_int(long a) const;
  CycloElt from_mpz(const mpz_class& a) const;
  CycloElt pi() const;
  /// z = zeta - 1 = pi^m.
  CycloElt z() const;
  CycloElt y() const;
  /// Zero known modulo pi^abs.
  CycloElt big_o(long abs) const;

  CycloElt add(const CycloElt& a, const CycloElt& b) const;
  CycloElt sub(const CycloElt& a, const CycloElt& b) const;
  CycloElt neg(const CycloElt& a) const;
  CycloElt mul(const CycloElt& a, const CycloElt& b) const;
  CycloElt invert(const CycloElt& a) const;
  CycloElt divide(const CycloElt& a, const CycloElt& b) const { return mul(a, invert(b)); }
  CycloElt pow(const CycloElt& a, long e) const;
  /// Multiplication by pi^k.
  CycloElt shift(const CycloElt& a, long k) const;

  /// nullopt for the exact zero; ZeroToPrecision for a zero to precision.
  std::optional<long> valuation(const CycloElt& a) const;
  /// Absolute precision: the element is known modulo pi^result.
  long absolute_precision(const CycloElt& a) const;
  bool is_zero_to_precision(const CycloElt& a) const { return a.num.is_zero(); }
  bool equal_to_precision(const CycloElt& a, const CycloElt& b) const { return sub(a, b).num.is_zero(); }

  /// Residue in GF(p) or GF(p)(y); requires v(a) >= 0.
  ResidueElt residue_class(const CycloElt& a) const;
  /// Lift with digits in [0, p).
  CycloElt lift(const ResidueElt& r) const;

  std::string str(const CycloElt& a) const;

 private:
  std::int64_t mod_mul(std::int64_t a, std::int64_t b) const;
  std::int64_t mod_add(std::int64_t a, std::int64_t b) const;
  int vp(std::int64_t a) const;
  PiPoly pi_mul(const PiPoly& a, const PiPoly& b) const;
  PiPoly pi_times(const PiPoly& a) const;
  PiPoly pi_div(const PiPoly& a) const;
  long pi_val(const PiPoly& a) const;
  std::int64_t coefficient_modulus(int j, long rel) const;
  void reduce(PiPoly& a, long rel) const;

  GaussPoly gp_make(std::vector<PiPoly> coeffs, long shift, long rel) const;
  GaussPoly gp_zero(long abs, bool exact) const;
  GaussPoly gp_add(const GaussPoly& a, const GaussPoly& b) const;
  GaussPoly gp_neg(const GaussPoly& a) const;
  GaussPoly gp_mul(const GaussPoly& a, const GaussPoly& b) const;
  GaussPoly gp_const(std::int64_t c) const;
  long gp_abs(const GaussPoly& a) const { return a.is_zero() ? a.shift : a.shift + a.rel; }
  CycloElt frac(GaussPoly num, GaussPoly den) const;

  std::string pi_str(const PiPoly& a, long rel) const;
  std::string gp_str(const GaussPoly& a) const;

  int p_, m_, n_, N_;
  bool with_y_;
  long cap_;
  std::int64_t M_;
  /// pi^n = sum_j tail_[j] pi^j, j < n.
  PiPoly tail_;
  /// p / pi on the basis.
  PiPoly p_over_pi_;
  ResidueField residue_;
};

enum class KummerVerdict { BestWild, BestFerocious, BestWildT, BestFerociousS, BestUnramified, NotBest, Trivial };

/// "Best_i" .. "Best_v", "NotBest", "Trivial".
std::string kummer_label(KummerVerdict v);
bool is_best(KummerVerdict v);

struct KummerClassification {
  KummerVerdict verdict = KummerVerdict::Trivial;
  /// v(h).
  std::optional<long> v_h;
  /// h pi^(-p floor(v(h)/p)), the generator every witness refers to.
  CycloElt unit;
  /// v(unit - 1); absent when unit - 1 is zero to a precision above e'p.
  std::optional<long> v_w;
  std::optional<CycloElt> t, u, s, c;
  std::optional<ResidueElt> residue;
  std::optional<ResidueElt> root;
  /// Improvement h -> unit^i g^p.
  std::optional<CycloElt> g;
  int i = 1;
  std::string reason;
};

enum class Precheck { Proceed, Trivial };

/// Trivial when v(h - 1) > e'p; h must be a unit.
Precheck kummer_precheck(const CycloField& F, const CycloElt& h);

KummerClassification classify_h(const CycloField& F, const CycloElt& h);

/// unit^i g^p, asserting v(h' - 1) > v(unit - 1).
CycloElt improve_h(const CycloField& F, const KummerClassification& c);

struct KummerOutcome {
  NormalizeOutcome::Kind kind = NormalizeOutcome::Kind::Trivial;
  CycloElt h_star;
  int steps = 0;
  int budget = 0;
  KummerClassification classification;
  /// v(unit - 1) of every non-trivial generator visited.
  std::vector<long> trajectory;
};

KummerOutcome normalize_h(const CycloField& F, const CycloElt& h, int budget);

/// Swan analogue e'p - v(h* - 1) with h* normalized into A.
InvariantsReport kummer_invariants(const KummerClassification& c, const CycloField& F);
InvariantsReport kummer_invariants(const KummerOutcome& o, const CycloField& F);

/// Random unit of A: residue nonzero, higher digits random.
CycloElt random_unit(const CycloField& F, Rng& rng);

/// Random unit g and i in 1..p-1; a violation is v(h*^i g^p - 1) > v(h* - 1).
ProbeResult probe_best_h(const CycloField& F, const CycloElt& h_star, Rng& rng, int count);

}  // namespace valuata
