#include "valuata/random.hpp"

#include "valuata/error.hpp"

namespace valuata {

namespace {

GFPoly random_poly(const GaloisField& k, Rng& rng, int max_deg, bool monic) {
  int deg = static_cast<int>(rng.range(0, max_deg));
  GFPoly a(static_cast<std::size_t>(deg) + 1);
  for (auto& c : a) c = static_cast<GFElt>(rng.below(k.order()));
  if (monic) a.back() = 1;
  gfpoly::trim(a);
  return a;
}

mpq_class random_grid_point(Rng& rng, const mpq_class& lo, const mpq_class& hi, long den) {
  // Points k/den inside [lo, hi].
  mpz_class first = lo.get_num() * den;
  mpz_class lo_k = first / lo.get_den();
  if (mpq_class(lo_k, den) < lo) ++lo_k;
  mpz_class hi_k = (hi.get_num() * den) / hi.get_den();
  if (mpq_class(hi_k, den) > hi) --hi_k;
  if (hi_k < lo_k) return lo;
  mpz_class span = hi_k - lo_k + 1;
  mpz_class pick = lo_k + mpz_class(static_cast<unsigned long>(rng.below(span.get_ui())));
  mpq_class r(pick, den);
  r.canonicalize();
  return r;
}

}  // namespace

ResidueElt random_residue(const ResidueField& k, Rng& rng, bool nonzero) {
  const GaloisField& gf = k.base();
  for (;;) {
    ResidueElt r;
    if (k.kind() == ResidueKind::Finite) {
      r = k.constant(static_cast<GFElt>(rng.below(gf.order())));
    } else {
      GFPoly num = random_poly(gf, rng, 2, false);
      GFPoly den = rng.coin(3) ? random_poly(gf, rng, 1, true) : GFPoly{1};
      if (den.empty()) den = {1};
      r = k.fraction(num, den);
    }
    if (!nonzero || !r.is_zero()) return r;
  }
}

GroupElt random_exponent(const ValueGroup& g, Rng& rng, const GroupElt& lo, const GroupElt& hi) {
  if (hi < lo) throw UsageError("random_exponent: empty range");
  long den = 1;
  if (g.kind != GroupKind::Int) {
    long choices[] = {1, g.p, static_cast<long>(g.p) * g.p};
    den = choices[rng.below(3)];
  }
  if (g.kind != GroupKind::Lex2) return GroupElt(random_grid_point(rng, lo.first(), hi.first(), den));
  mpq_class first = random_grid_point(rng, lo.first(), hi.first(), den);
  // Second component: small integers, clipped to keep the pair inside [lo, hi].
  mpq_class s_lo = first == lo.first() ? lo.second() : mpq_class(-3);
  mpq_class s_hi = first == hi.first() ? hi.second() : mpq_class(3);
  if (s_hi < s_lo) return lo;
  mpq_class second = random_grid_point(rng, s_lo, s_hi, 1);
  return GroupElt(first, second);
}

Series random_series(const SeriesField& K, Rng& rng, const GroupElt& lo, const GroupElt& hi, int max_terms) {
  for (;;) {
    int n = static_cast<int>(rng.range(1, max_terms));
    std::vector<Term> terms;
    for (int i = 0; i < n; ++i) {
      terms.push_back({random_exponent(K.group(), rng, lo, hi), random_residue(K.residue(), rng, true)});
    }
    Series s = K.from_terms(std::move(terms));
    if (!s.is_exact_zero()) return s;
  }
}

}  // namespace valuata
