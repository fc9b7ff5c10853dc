#include "valuata/norm_ideal.hpp"

#include <algorithm>

#include "valuata/error.hpp"

namespace valuata {

namespace {

ExtElt sigma_minus_one(const ASExtension& L, const ExtElt& a) { return L.sub(L.sigma(a, 1), a); }

bool is_zero_exact_or_prec(const ASExtension& L, const ExtElt& a) { return L.is_zero_to_precision(a); }

GroupElt min_coefficient_valuation(const SeriesField& K, const ExtElt& a) {
  std::optional<GroupElt> best;
  for (const auto& c : a.coeffs) {
    if (c.is_exact_zero()) continue;
    auto v = K.valuation_lower_bound(c);
    if (v && (!best || *v < *best)) best = *v;
  }
  return best ? *best : K.group().zero();
}

}  // namespace

GroupElt lefschetz_val(const ASExtension& L, const ExtElt& b, int j) {
  if (j <= 0 || j >= L.p()) throw UsageError("sigma power must lie in [1, p)");
  ExtElt d = L.sub(L.sigma(b, j), b);
  if (is_zero_exact_or_prec(L, d)) throw DomainError("FixedElement: sigma fixes b to precision");
  return L.valuation(d) - L.valuation(b);
}

ExtElt g_prime(const ASExtension& L, const ExtElt& b) {
  ExtElt g = L.one();
  for (int i = 1; i < L.p(); ++i) {
    ExtElt d = L.sub(b, L.sigma(b, i));
    if (is_zero_exact_or_prec(L, d)) throw DomainError("NotAGenerator: b and sigma^" + std::to_string(i) + "(b) agree");
    g = L.mul(g, d);
  }
  return g;
}

ExtElt gamma_of(const ASExtension& L, const ExtElt& b, std::optional<GroupElt> target) {
  return L.mul(L.pow(b, static_cast<unsigned>(L.p() - 1)), L.invert(g_prime(L, b), target));
}

LefschetzSample y_construct(const ASExtension& L, const ExtElt& b) {
  const SeriesField& K = L.base();
  const int p = L.p();
  LefschetzSample out;
  out.b = b;
  out.s = lefschetz_val(L, b);
  ExtElt gp = g_prime(L, b);
  ExtElt cof = L.conjugate_cofactor(gp);
  ExtElt nd = L.mul(gp, cof);
  if (!L.in_base(nd)) throw MathAssertion("ConstructionAssertFailed: N(g'(b)) has an alpha component");
  out.y_den = nd.coeffs[0];

  ExtElt cur = L.mul(L.pow(b, static_cast<unsigned>(p - 1)), cof);
  GroupElt prev = L.valuation(cur);
  for (int i = 1; i <= p - 2; ++i) {
    cur = sigma_minus_one(L, cur);
    GroupElt v = L.valuation(cur);
    out.c.push_back(v - prev);
    prev = v;
  }
  out.y_num = cur;

  out.sigma_ok = L.equal_to_precision(sigma_minus_one(L, out.y_num), L.from_base(out.y_den));
  ExtElt as = L.sub(L.pow(out.y_num, static_cast<unsigned>(p)),
                    L.scale(out.y_num, K.pow(out.y_den, static_cast<unsigned>(p - 1))));
  out.as_ok = L.in_base(as);
  if (!out.sigma_ok) throw MathAssertion("ConstructionAssertFailed: sigma(y) != y + 1 for b = " + L.str(b));
  if (!out.as_ok) throw MathAssertion("ConstructionAssertFailed: y^p - y is not in K for b = " + L.str(b));

  auto vd = K.valuation(out.y_den);
  out.s_prime = *vd - L.valuation(out.y_num);
  out.n_y_num = L.norm(out.y_num);
  out.n_y_den = K.pow(out.y_den, static_cast<unsigned>(p));
  return out;
}

TraceLemmaReport verify_trace_lemma(const ASExtension& L, const ExtElt& b) {
  const SeriesField& K = L.base();
  const int p = L.p();
  TraceLemmaReport rep;
  ExtElt gp = g_prime(L, b);
  ExtElt cof = L.conjugate_cofactor(gp);
  rep.norm_g_prime = L.norm(gp);

  std::vector<ExtElt> powers;
  ExtElt bm = L.one();
  for (int m = 0; m < p; ++m) {
    powers.push_back(L.mul(bm, cof));
    bm = L.mul(bm, b);
  }

  std::optional<ExtElt> inv_g;
  try {
    GroupElt lowest = min_coefficient_valuation(K, powers[0]);
    for (const auto& x : powers) lowest = std::min(lowest, min_coefficient_valuation(K, x));
    GroupElt target = K.default_precision() + *K.valuation(rep.norm_g_prime) - lowest;
    if (!target.is_positive()) target = K.default_precision();
    inv_g = L.invert(gp, target);
  } catch (const InsufficientPrecision& e) {
    rep.direct_skipped = e.what();
  }

  rep.pass = true;
  for (int m = 0; m < p; ++m) {
    TraceTerm t;
    t.m = m;
    t.scaled = L.trace(powers[m]);
    Series expected = m == p - 1 ? rep.norm_g_prime : K.zero();
    t.scaled_ok = K.equal_to_precision(t.scaled, expected);
    if (inv_g) {
      t.direct = L.trace(L.mul(L.pow(b, static_cast<unsigned>(m)), *inv_g));
      t.direct_ok = K.equal_to_precision(*t.direct, m == p - 1 ? K.one() : K.zero());
      rep.pass = rep.pass && *t.direct_ok;
    }
    rep.pass = rep.pass && t.scaled_ok;
    rep.terms.push_back(std::move(t));
  }
  return rep;
}

InequalityReport verify_s_inequality(const ASExtension& L, const ExtElt& b) {
  InequalityReport r;
  r.sample = y_construct(L, b);
  r.s = r.sample.s;
  r.s_prime = r.sample.s_prime;
  r.pass = r.s >= r.s_prime;
  return r;
}

SwanCheck hn_defectless_check(const NormalizeOutcome& outcome, const ASExtension& ext) {
  if (outcome.kind != NormalizeOutcome::Kind::BestFound) throw DomainError("hn_defectless_check needs a BestFound outcome");
  SwanCheck c;
  auto v = ext.base().valuation(outcome.f_star);
  c.generator_side = -*v;
  ExtElt inv = ext.invert(ext.alpha());
  c.norm_side = *ext.base().valuation(ext.norm(inv));
  c.pass = c.norm_side == c.generator_side;
  if (!c.pass) {
    throw MathAssertion("Mismatch: v(N(1/alpha)) = " + c.norm_side.str() + " but -v(f*) = " + c.generator_side.str());
  }
  return c;
}

std::vector<ExtElt> sample_generators(const ASExtension& L, Rng& rng, int count) {
  const SeriesField& K = L.base();
  const int p = L.p();
  const bool lex = K.group().rank() == 2;
  const GroupElt lo = lex ? GroupElt(-1, 0) : GroupElt(-1);
  const GroupElt hi = lex ? GroupElt(2, 0) : GroupElt(2);
  std::vector<ExtElt> out;
  while (static_cast<int>(out.size()) < count) {
    ExtElt b = L.zero();
    if (rng.coin()) {
      const int i = static_cast<int>(rng.range(1, p - 1));
      b.coeffs[0] = K.one();
      b.coeffs[i] = K.monomial(random_residue(K.residue(), rng, true), random_exponent(K.group(), rng, lo, hi));
    } else {
      for (int i = 0; i < p; ++i) {
        if (i == 0 || rng.coin(3) == false) b.coeffs[i] = random_series(K, rng, lo, hi, 2);
      }
    }
    if (L.in_base(b)) continue;
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace valuata
