#include "valuata/best_f.hpp"

#include <algorithm>

#include "valuata/error.hpp"

namespace valuata {

std::string verdict_label(ASVerdict v) {
  switch (v) {
    case ASVerdict::BestWild: return "Best_i";
    case ASVerdict::BestFerocious: return "Best_ii";
    case ASVerdict::BestUnramified: return "Best_iii";
    case ASVerdict::NotBest: return "NotBest";
    case ASVerdict::Trivial: return "Trivial";
  }
  return "?";
}

bool is_best(ASVerdict v) {
  return v == ASVerdict::BestWild || v == ASVerdict::BestFerocious || v == ASVerdict::BestUnramified;
}

std::string type_label(ExtensionType t) {
  switch (t) {
    case ExtensionType::Unramified: return "unramified";
    case ExtensionType::Wild: return "wild";
    case ExtensionType::Ferocious: return "ferocious";
    case ExtensionType::Defect: return "defect";
  }
  return "?";
}

std::string outcome_label(NormalizeOutcome::Kind k) {
  switch (k) {
    case NormalizeOutcome::Kind::BestFound: return "BestFound";
    case NormalizeOutcome::Kind::DefectEvidence: return "DefectEvidence";
    case NormalizeOutcome::Kind::Trivial: return "Trivial";
  }
  return "?";
}

ASClassification classify_as(const SeriesField& K, const Series& f) {
  const ResidueField& k = K.residue();
  ASClassification c;
  if (!f.has_terms()) {
    if (f.is_exact_zero()) {
      c.reason = "f = 0";
      return c;
    }
    if (f.precision()->is_positive()) {
      c.reason = "f = O(X^" + f.precision()->str() + "), so v(f) > 0";
      return c;
    }
    throw InsufficientPrecision("leading term of f is truncated away (precision " + f.precision()->str() + ")");
  }
  const GroupElt v = f.leading().exp;
  c.valuation = v;
  if (v.is_positive()) {
    c.reason = "v(f) = " + v.str() + " > 0";
    return c;
  }
  if (v.is_zero()) {
    ResidueElt fbar = K.residue_class(f);
    c.residue = fbar;
    auto x = k.artin_schreier_preimage(fbar);
    if (!x) {
      c.verdict = ASVerdict::BestUnramified;
      c.reason = "residue " + k.str(fbar) + " is not of the form x^p - x";
      return c;
    }
    c.verdict = ASVerdict::NotBest;
    c.root = *x;
    c.improvement = K.lift(k.neg(*x));
    c.reason = "residue " + k.str(fbar) + " = x^p - x with x = " + k.str(*x);
    return c;
  }
  auto b = K.group().is_p_divisible(v);
  if (!b) {
    c.verdict = ASVerdict::BestWild;
    c.reason = "v(f) = " + v.str() + " is not divisible by p in " + K.group().name();
    return c;
  }
  // f = u g^(-p) with g = X^(-v/p), so u = f X^(-v).
  c.g = K.monomial(k.one(), -*b);
  c.unit = K.shift(f, k.one(), -v);
  ResidueElt ubar = K.residue_class(*c.unit);
  c.residue = ubar;
  auto lambda = k.pth_root(ubar);
  if (!lambda) {
    c.verdict = ASVerdict::BestFerocious;
    c.reason = "residue of u = " + k.str(ubar) + " is not a p-th power";
    return c;
  }
  c.verdict = ASVerdict::NotBest;
  c.root = *lambda;
  c.improvement = K.monomial(k.neg(*lambda), *b);
  c.reason = "residue of u = " + k.str(ubar) + " = (" + k.str(*lambda) + ")^p";
  return c;
}

Series improve_as(const SeriesField& K, const Series& f, const Series& h) {
  auto v_old = K.valuation(f);
  if (!v_old) throw DomainError("improve: f is zero");
  Series next = K.artin_schreier_shift(f, h);
  auto bound = K.valuation_lower_bound(next);
  if (bound && *bound <= *v_old) {
    throw MathAssertion("NoImprovement: v(f + h^p - h) = " + bound->str() + " is not above v(f) = " + v_old->str());
  }
  return next;
}

NormalizeOutcome normalize_as(const SeriesField& K, const Series& f, int budget) {
  if (budget < 1) throw UsageError("budget must be at least 1");
  NormalizeOutcome out;
  out.budget = budget;
  Series cur = f;
  int limit = budget;
  for (int steps = 0;; ++steps) {
    ASClassification c = classify_as(K, cur);
    out.steps = steps;
    out.f_star = cur;
    if (c.verdict == ASVerdict::Trivial) {
      out.kind = NormalizeOutcome::Kind::Trivial;
      out.classification = std::move(c);
      return out;
    }
    out.trajectory.push_back(*c.valuation);
    if (steps == 0 && K.group().kind == GroupKind::Int && c.valuation->is_negative()) {
      mpz_class need = 1 - c.valuation->first().get_num();
      if (need > limit) limit = static_cast<int>(need.get_si());
      out.budget = limit;
    }
    if (is_best(c.verdict)) {
      out.kind = NormalizeOutcome::Kind::BestFound;
      out.classification = std::move(c);
      return out;
    }
    if (steps == limit) {
      out.kind = NormalizeOutcome::Kind::DefectEvidence;
      out.classification = std::move(c);
      return out;
    }
    cur = improve_as(K, cur, *c.improvement);
  }
}

InvariantsReport as_invariants(const ASClassification& c, int p) {
  InvariantsReport r;
  switch (c.verdict) {
    case ASVerdict::BestWild:
      r.e = p;
      r.type = ExtensionType::Wild;
      break;
    case ASVerdict::BestFerocious:
      r.f_res = p;
      r.type = ExtensionType::Ferocious;
      break;
    case ASVerdict::BestUnramified:
      r.f_res = p;
      r.type = ExtensionType::Unramified;
      break;
    default:
      throw DomainError("invariants need a Best_* classification, got " + verdict_label(c.verdict));
  }
  r.swan = -*c.valuation;
  return r;
}

InvariantsReport as_invariants(const NormalizeOutcome& o, int p) {
  switch (o.kind) {
    case NormalizeOutcome::Kind::BestFound: return as_invariants(o.classification, p);
    case NormalizeOutcome::Kind::DefectEvidence: {
      InvariantsReport r;
      r.d = p;
      r.type = ExtensionType::Defect;
      return r;
    }
    case NormalizeOutcome::Kind::Trivial: break;
  }
  throw DomainError("invariants of a trivial extension");
}

GroupElt classical_swan(const Series& f_star, const ASExtension& ext) {
  const SeriesField& K = ext.base();
  auto v = K.valuation(f_star);
  if (!v) throw DomainError("classical_swan: f* = 0");
  ExtElt inv = ext.invert(ext.alpha());
  auto vn = K.valuation(ext.norm(inv));
  if (!vn || *vn != -*v) {
    throw MathAssertion("Mismatch: v(N(1/alpha)) = " + (vn ? vn->str() : std::string("inf")) +
                        " but -v(f*) = " + (-*v).str());
  }
  return *vn;
}

ProbeResult probe_best_f(const SeriesField& K, const Series& f_star, Rng& rng, int count) {
  ProbeResult r;
  auto v = K.valuation(f_star);
  if (!v) throw DomainError("probe: f* = 0");
  const GroupElt hi = K.group().zero();
  const GroupElt lo = std::min(*v, hi);
  const int p = K.p();
  for (int n = 0; n < count; ++n) {
    Series h = random_series(K, rng, lo, hi, 3);
    long i = rng.range(1, p - 1);
    Series g = K.scale(K.artin_schreier_shift(f_star, h), i);
    ++r.probes;
    auto bound = K.valuation_lower_bound(g);
    if (!bound || *bound > *v) {
      if (r.violations++ == 0) {
        r.first_violation = "h = " + K.str(h) + ", i = " + std::to_string(i) + " gives " + K.str(g);
      }
    }
  }
  return r;
}

}  // namespace valuata
