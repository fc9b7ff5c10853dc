#include "doctest.h"
#include "valuata/best_f.hpp"
#include "valuata/error.hpp"

using namespace valuata;

namespace {

SeriesField field(long q, GroupKind g, long prec = 10, bool ratfunc = false) {
  auto k = ratfunc ? ResidueField::rational_functions(q) : ResidueField::finite(q);
  return {k, ValueGroup{g, k.p()}, g == GroupKind::Lex2 ? GroupElt(mpq_class(prec), 0) : GroupElt(prec)};
}

Series X(const SeriesField& K, long num, long den = 1) {
  return K.monomial(K.residue().one(), GroupElt::ratio(num, den));
}

}  // namespace

TEST_CASE("classify examples") {
  auto K = field(2, GroupKind::Int);
  auto c = classify_as(K, X(K, -3));
  CHECK(c.verdict == ASVerdict::BestWild);
  CHECK(verdict_label(c.verdict) == "Best_i");

  auto R = field(2, GroupKind::Int, 10, true);
  c = classify_as(R, R.shift(R.one(), R.residue().y(), GroupElt(-2)));
  CHECK(c.verdict == ASVerdict::BestFerocious);
  CHECK(c.residue == R.residue().y());

  c = classify_as(K, K.one());
  CHECK(c.verdict == ASVerdict::BestUnramified);

  c = classify_as(K, X(K, -6));
  CHECK(c.verdict == ASVerdict::NotBest);
  CHECK(*c.improvement == X(K, -3));
  CHECK(*c.g == X(K, 3));

  CHECK(classify_as(K, X(K, 1)).verdict == ASVerdict::Trivial);
  CHECK(classify_as(K, K.zero()).verdict == ASVerdict::Trivial);
  CHECK(classify_as(K, K.truncate(X(K, 4), GroupElt(2))).verdict == ASVerdict::Trivial);
  CHECK_THROWS_AS(classify_as(K, K.truncate(X(K, -1), GroupElt(-2))), InsufficientPrecision);
}

TEST_CASE("unit with residue in the Artin-Schreier image shifts to a trivial generator") {
  for (long q : {4, 3, 9}) {
    auto K = field(q, GroupKind::Int);
    const auto& k = K.residue();
    ResidueElt x = k.constant(static_cast<GFElt>(q - 1));
    Series f = K.add(K.constant(k.sub(k.frobenius(x), x)), X(K, 2));
    if (K.residue_class(f).is_zero()) continue;
    auto c = classify_as(K, f);
    REQUIRE(c.verdict == ASVerdict::NotBest);
    auto out = normalize_as(K, f, 3);
    CHECK(out.kind == NormalizeOutcome::Kind::Trivial);
    CHECK(out.steps == 1);
  }
}

TEST_CASE("improve examples") {
  auto K = field(2, GroupKind::Int);
  CHECK(improve_as(K, X(K, -6), X(K, -3)) == X(K, -3));
  auto H = field(2, GroupKind::IntInvP);
  CHECK(improve_as(H, X(H, -1), X(H, -1, 2)) == X(H, -1, 2));
  Series f = K.add(X(K, -2), X(K, -1));
  auto c = classify_as(K, f);
  REQUIRE(c.verdict == ASVerdict::NotBest);
  CHECK(*c.improvement == X(K, -1));
  CHECK(improve_as(K, f, *c.improvement).is_exact_zero());
  CHECK_THROWS_AS(improve_as(K, X(K, -3), X(K, -1)), MathAssertion);
}

TEST_CASE("normalize examples") {
  auto K = field(2, GroupKind::Int);
  auto out = normalize_as(K, X(K, -6), 5);
  CHECK(out.kind == NormalizeOutcome::Kind::BestFound);
  CHECK(out.steps == 1);
  CHECK(out.f_star == X(K, -3));
  CHECK(out.classification.verdict == ASVerdict::BestWild);

  auto H = field(2, GroupKind::IntInvP);
  out = normalize_as(H, X(H, -1), 10);
  CHECK(out.kind == NormalizeOutcome::Kind::DefectEvidence);
  REQUIRE(out.trajectory.size() == 11);
  for (std::size_t t = 0; t < out.trajectory.size(); ++t)
    CHECK(out.trajectory[t] == GroupElt(-mpq_class(1, mpz_class(1) << static_cast<unsigned>(t))));
  CHECK(out.trajectory.back() == GroupElt::ratio(-1, 1024));

  for (long q : {2, 3}) {
    auto Kq = field(q, GroupKind::Int);
    CHECK(normalize_as(Kq, X(Kq, 1), 4).kind == NormalizeOutcome::Kind::Trivial);
  }
  CHECK_THROWS_AS(normalize_as(K, X(K, -1), 0), UsageError);
}

TEST_CASE("discrete groups always reach a best generator") {
  auto K = field(2, GroupKind::Int);
  auto out = normalize_as(K, X(K, -8), 1);
  CHECK(out.kind == NormalizeOutcome::Kind::BestFound);
  CHECK(out.steps == 3);
  CHECK(out.f_star == X(K, -1));
  CHECK(out.budget == 9);
}

TEST_CASE("invariants") {
  auto K = field(2, GroupKind::Int);
  auto inv = as_invariants(normalize_as(K, X(K, -3), 4), 2);
  CHECK(inv.e == 2);
  CHECK(inv.f_res == 1);
  CHECK(inv.d == 1);
  CHECK(inv.type == ExtensionType::Wild);
  CHECK(inv.swan == GroupElt(3));

  inv = as_invariants(normalize_as(K, K.one(), 4), 2);
  CHECK((inv.e == 1 && inv.f_res == 2 && inv.d == 1));
  CHECK(inv.swan == GroupElt(0));

  auto H = field(2, GroupKind::IntInvP);
  inv = as_invariants(normalize_as(H, X(H, -1), 6), 2);
  CHECK((inv.d == 2 && inv.e == 1 && inv.f_res == 1));
  CHECK(inv.type == ExtensionType::Defect);
  CHECK_FALSE(inv.swan.has_value());

  CHECK_THROWS_AS(as_invariants(normalize_as(K, X(K, 2), 4), 2), DomainError);
}

TEST_CASE("classical swan") {
  auto K = field(2, GroupKind::Int);
  CHECK(classical_swan(X(K, -3), ASExtension(K, X(K, -3))) == GroupElt(3));
  CHECK(classical_swan(K.one(), ASExtension(K, K.one())) == GroupElt(0));
  auto R = field(2, GroupKind::Int, 10, true);
  Series f = R.shift(R.one(), R.residue().y(), GroupElt(-2));
  CHECK(classical_swan(f, ASExtension(R, f)) == GroupElt(2));
}

TEST_CASE("best generators survive random probes") {
  Rng rng(2024);
  auto K2 = field(2, GroupKind::Int), K3 = field(3, GroupKind::Int), R = field(2, GroupKind::Int, 10, true),
       H = field(2, GroupKind::Rat, 10, true), K4 = field(4, GroupKind::Int);
  std::vector<std::pair<SeriesField, Series>> cases = {
      {K2, X(K2, -3)},
      {K3, X(K3, -5)},
      {R, R.shift(R.one(), R.residue().y(), GroupElt(-2))},
      {K2, K2.one()},
      {K4, K4.constant(K4.residue().constant(2))},
      {H, H.shift(H.one(), H.residue().y(), GroupElt::ratio(-3, 2))},
  };
  for (const auto& [K, f] : cases) {
    REQUIRE(is_best(classify_as(K, f).verdict));
    auto r = probe_best_f(K, f, rng, 200);
    CHECK(r.probes == 200);
    CHECK_MESSAGE(r.violations == 0, r.first_violation);
  }
}

TEST_CASE("shifted generators give the same invariants") {
  Rng rng(99);
  auto K = field(3, GroupKind::Int);
  Series f = K.add(X(K, -4), X(K, -1));
  auto base = as_invariants(normalize_as(K, f, 20), 3);
  for (int n = 0; n < 50; ++n) {
    Series h = random_series(K, rng, GroupElt(-1), GroupElt(0), 2);
    long i = rng.range(1, 2);
    Series g = K.scale(K.artin_schreier_shift(f, h), i);
    auto inv = as_invariants(normalize_as(K, g, 20), 3);
    CHECK(inv.e == base.e);
    CHECK(inv.f_res == base.f_res);
    CHECK(inv.d == base.d);
    CHECK(inv.type == base.type);
    CHECK(inv.swan == base.swan);
  }
}
