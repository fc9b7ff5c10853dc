#pragma once

#include <optional>
#include <string>
#include <vector>

#include "valuata/as_extension.hpp"
#include "valuata/best_f.hpp"
#include "valuata/random.hpp"

namespace valuata {

/// v_L(sigma^j(b) - b) - v_L(b), the valuation of sigma^j(b)/b - 1.
/// DomainError (FixedElement) when sigma^j fixes b to precision.
GroupElt lefschetz_val(const ASExtension& L, const ExtElt& b, int j = 1);

/// g'(b) = prod_{i=1}^{p-1} (b - sigma^i(b)); DomainError (NotAGenerator)
/// when two conjugates agree to precision.
ExtElt g_prime(const ASExtension& L, const ExtElt& b);

/// b^(p-1) / g'(b), through invert_ext.
ExtElt gamma_of(const ASExtension& L, const ExtElt& b, std::optional<GroupElt> target = std::nullopt);

/// The y of the construction, kept as Y / D with D = N(g'(b)) in K so that
/// no series inversion is needed:
///   G = b^(p-1) prod_{j>=1} sigma^j(g'(b)),  Y = (sigma - 1)^(p-2)(G),  y = Y / D.
struct LefschetzSample {
  ExtElt b;
  /// lefschetz_val(b).
  GroupElt s;
  ExtElt y_num;
  Series y_den;
  /// -v_L(y) = v_K(D) - v_L(Y).
  GroupElt s_prime;
  /// N(y) = n_y_num / n_y_den with n_y_den = D^p.
  Series n_y_num;
  Series n_y_den;
  /// c_i = v_L((sigma-1)^i G) - v_L((sigma-1)^(i-1) G), i = 1 .. p-2.
  std::vector<GroupElt> c;
  /// sigma(Y) - Y == D, i.e. sigma(y) = y + 1.
  bool sigma_ok = false;
  /// Y^p - Y D^(p-1) in K, i.e. y^p - y in K.
  bool as_ok = false;
};

/// MathAssertion (ConstructionAssertFailed) when either check fails.
LefschetzSample y_construct(const ASExtension& L, const ExtElt& b);

struct TraceTerm {
  int m = 0;
  /// Tr(b^m prod_{j>=1} sigma^j(g'(b))), compared with D [m = p-1].
  Series scaled;
  bool scaled_ok = false;
  /// Tr(b^m / g'(b)) through invert_ext, when the inversion is available.
  std::optional<Series> direct;
  std::optional<bool> direct_ok;
};

struct TraceLemmaReport {
  Series norm_g_prime;
  std::vector<TraceTerm> terms;
  /// Why the direct check was skipped, if it was.
  std::string direct_skipped;
  bool pass = false;
};

/// Tr(b^m / g'(b)) = 0 for 0 <= m <= p-2 and 1 for m = p-1. The direct check
/// uses an inversion target chosen so every trace is known to at least the
/// field's default precision.
TraceLemmaReport verify_trace_lemma(const ASExtension& L, const ExtElt& b);

struct InequalityReport {
  GroupElt s;
  GroupElt s_prime;
  bool pass = false;
  LefschetzSample sample;
};

InequalityReport verify_s_inequality(const ASExtension& L, const ExtElt& b);

struct SwanCheck {
  GroupElt norm_side;
  GroupElt generator_side;
  bool pass = false;
};

/// v_A(N(1/alpha)) = -v_A(f*) on a BestFound outcome.
SwanCheck hn_defectless_check(const NormalizeOutcome& outcome, const ASExtension& ext);

/// Deterministic sample generators b outside K: units 1 + c X^e alpha^i and
/// random small-support elements.
std::vector<ExtElt> sample_generators(const ASExtension& L, Rng& rng, int count);

}  // namespace valuata
