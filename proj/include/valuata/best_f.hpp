#pragma once

#include <optional>
#include <string>
#include <vector>

#include "valuata/as_extension.hpp"
#include "valuata/random.hpp"

namespace valuata {

enum class ASVerdict { BestWild, BestFerocious, BestUnramified, NotBest, Trivial };

/// "Best_i", "Best_ii", "Best_iii", "NotBest", "Trivial".
std::string verdict_label(ASVerdict v);
bool is_best(ASVerdict v);

/// Verdict for one generator f of T^p - T - f, with the data that certifies it.
struct ASClassification {
  ASVerdict verdict = ASVerdict::Trivial;
  /// v(f); absent when f is zero (exactly or to a positive precision).
  std::optional<GroupElt> valuation;
  /// Decomposition f = u g^(-p) with g = X^(-v(f)/p).
  std::optional<Series> unit;
  std::optional<Series> g;
  /// Residue of u (ferocious / NotBest with v(f) < 0) or of f (v(f) = 0).
  std::optional<ResidueElt> residue;
  /// p-th root of the residue, or its Artin-Schreier preimage.
  std::optional<ResidueElt> root;
  /// h with v(f + h^p - h) > v(f).
  std::optional<Series> improvement;
  std::string reason;
};

enum class ExtensionType { Unramified, Wild, Ferocious, Defect };
std::string type_label(ExtensionType t);

struct InvariantsReport {
  int e = 1;
  int f_res = 1;
  int d = 1;
  ExtensionType type = ExtensionType::Unramified;
  /// Absent in the defect case.
  std::optional<GroupElt> swan;
};

struct NormalizeOutcome {
  enum class Kind { BestFound, DefectEvidence, Trivial };
  Kind kind = Kind::Trivial;
  /// Last generator reached.
  Series f_star;
  int steps = 0;
  int budget = 0;
  /// Final classification (Best_* for BestFound, NotBest for DefectEvidence).
  ASClassification classification;
  /// v of every non-trivial generator visited, starting with the input.
  std::vector<GroupElt> trajectory;
};

std::string outcome_label(NormalizeOutcome::Kind k);

ASClassification classify_as(const SeriesField& K, const Series& f);

/// f + h^p - h, asserting the valuation strictly increases.
Series improve_as(const SeriesField& K, const Series& f, const Series& h);

/// Iterates classify / improve for at most `budget` improvements. For Γ = Int
/// the budget is raised to 1 - v(f), which always suffices.
NormalizeOutcome normalize_as(const SeriesField& K, const Series& f, int budget);

InvariantsReport as_invariants(const ASClassification& c, int p);
InvariantsReport as_invariants(const NormalizeOutcome& o, int p);

/// v(N(1/alpha)) for the extension of f*, checked against -v(f*).
GroupElt classical_swan(const Series& f_star, const ASExtension& ext);

struct ProbeResult {
  int probes = 0;
  int violations = 0;
  /// Probes whose outcome was hidden by truncation.
  int inconclusive = 0;
  std::string first_violation;
};

/// Random h with exponents in [v(f*), 0] and i in 1..p-1; a violation is
/// v(i (f* + h^p - h)) > v(f*).
ProbeResult probe_best_f(const SeriesField& K, const Series& f_star, Rng& rng, int count);

}  // namespace valuata
