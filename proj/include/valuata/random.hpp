#pragma once

#include <cstdint>
#include <random>

#include "valuata/hahn_series.hpp"

namespace valuata {

/// Deterministic generator for sample corpora. Only raw mt19937_64 output is
/// used so sequences are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }
  long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool coin(unsigned one_in = 2) { return below(one_in) == 0; }

 private:
  std::mt19937_64 engine_;
};

ResidueElt random_residue(const ResidueField& k, Rng& rng, bool nonzero = false);

/// Exponent in [lo, hi] of the field's value group, drawn from a grid with
/// denominators up to p^2 where the group allows them.
GroupElt random_exponent(const ValueGroup& g, Rng& rng, const GroupElt& lo, const GroupElt& hi);

/// Nonzero exact series with 1..max_terms terms, exponents in [lo, hi].
Series random_series(const SeriesField& K, Rng& rng, const GroupElt& lo, const GroupElt& hi, int max_terms = 3);

}  // namespace valuata
