#include "doctest.h"
#include "oracles.hpp"
#include "valuata/error.hpp"
#include "valuata/hahn_series.hpp"
#include "valuata/random.hpp"

using namespace valuata;

namespace {

SeriesField field(long q, GroupKind g, long prec = 8, bool ratfunc = false) {
  auto k = ratfunc ? ResidueField::rational_functions(q) : ResidueField::finite(q);
  ValueGroup vg{g, k.p()};
  return {k, vg, g == GroupKind::Lex2 ? GroupElt(mpq_class(prec), 0) : GroupElt(prec)};
}

Series X(const SeriesField& K, long num, long den = 1) {
  return K.monomial(K.residue().one(), GroupElt::ratio(num, den));
}

}  // namespace

TEST_CASE("add and mul examples") {
  auto K2 = field(2, GroupKind::Int);
  Series a = K2.add(X(K2, -1), K2.one());
  Series s = K2.add(a, X(K2, -1));
  CHECK(s == K2.one());
  auto Kq = field(2, GroupKind::Rat);
  CHECK(Kq.mul(X(Kq, 1, 2), X(Kq, 1, 2)) == X(Kq, 1));
  auto K3 = field(3, GroupKind::Int);
  Series prod = K3.mul(K3.add(K3.one(), X(K3, 1)), K3.sub(K3.one(), X(K3, 1)));
  CHECK(prod == K3.sub(K3.one(), X(K3, 2)));
  CHECK(K3.str(prod) == "1 + 2*X^(2)");
}

TEST_CASE("valuation") {
  auto K = field(2, GroupKind::IntInvP);
  CHECK(K.valuation(K.add(X(K, -3), K.one())) == GroupElt(-3));
  CHECK_FALSE(K.valuation(K.zero()).has_value());
  CHECK(K.valuation(X(K, 1, 4)) == GroupElt::ratio(1, 4));
  Series z = K.truncate(X(K, 5), GroupElt(4));
  CHECK_THROWS_AS(K.valuation(z), ZeroToPrecision);
  CHECK(K.valuation_lower_bound(z) == GroupElt(4));
  CHECK_THROWS_AS(K.monomial(K.residue().one(), GroupElt::ratio(1, 3)), UsageError);
}

TEST_CASE("invert") {
  auto K = field(2, GroupKind::Int, 4);
  CHECK(K.invert(X(K, 3)) == X(K, -3));
  Series inv = K.invert(K.add(K.one(), X(K, 1)));
  CHECK(K.str(inv) == "1 + X^(1) + X^(2) + X^(3) + O(X^(4))");
  CHECK_THROWS_AS(K.invert(K.zero()), DivisionByZero);
  CHECK_THROWS_AS(K.invert(K.truncate(X(K, 9), GroupElt(2))), ZeroToPrecision);

  auto L = field(2, GroupKind::Lex2);
  Series inf = L.add(L.one(), L.monomial(L.residue().one(), GroupElt(0, 1)));
  CHECK_THROWS_AS(L.invert(inf), InsufficientPrecision);
  CHECK(L.invert(inf, GroupElt(0, 5)).precision() == GroupElt(0, 5));
}

TEST_CASE("random inverses multiply back to one") {
  Rng rng(11);
  for (auto K : {field(2, GroupKind::Int), field(3, GroupKind::IntInvP), field(4, GroupKind::Rat),
                 field(2, GroupKind::Int, 6, true)}) {
    for (int n = 0; n < 100; ++n) {
      Series a = random_series(K, rng, GroupElt(-2), GroupElt(3), 3);
      Series prod = K.mul(a, K.invert(a));
      if (prod.precision()) CHECK(*prod.precision() >= K.default_precision());
      CHECK(K.equal_to_precision(prod, K.one()));
    }
  }
}

TEST_CASE("residue class") {
  auto K = field(2, GroupKind::Int, 8, true);
  const auto& k = K.residue();
  CHECK(K.residue_class(K.add(K.one(), X(K, 1))) == k.one());
  CHECK(K.residue_class(X(K, 1)) == k.zero());
  CHECK(K.residue_class(K.add(K.constant(k.y()), X(K, 1))) == k.y());
  CHECK_THROWS_AS(K.residue_class(X(K, -1)), UsageError);
}

TEST_CASE("frobenius and p-th roots") {
  auto K = field(2, GroupKind::IntInvP);
  CHECK(K.frobenius(X(K, -1)) == X(K, -2));
  CHECK(K.pth_root(X(K, -1)) == X(K, -1, 2));
  auto R = field(2, GroupKind::Int, 8, true);
  Series a = R.add(R.constant(R.residue().y()), X(R, 1));
  CHECK(R.str(R.frobenius(a)) == "y^2 + X^(2)");
  CHECK_FALSE(R.supports_pth_root());
  CHECK_FALSE(R.pth_root(a).has_value());
}

TEST_CASE("Artin-Schreier shift examples") {
  auto K = field(2, GroupKind::Int);
  CHECK(K.artin_schreier_shift(X(K, -6), X(K, -3)) == X(K, -3));
  CHECK(K.artin_schreier_shift(X(K, -5), K.zero()) == X(K, -5));
  auto H = field(2, GroupKind::IntInvP);
  CHECK(H.artin_schreier_shift(X(H, -1), X(H, -1, 2)) == X(H, -1, 2));
}

TEST_CASE("valuation laws and schoolbook products on samples") {
  Rng rng(5);
  for (auto K : {field(2, GroupKind::Int), field(3, GroupKind::IntInvP), field(2, GroupKind::Lex2),
                 field(3, GroupKind::Rat, 8, true)}) {
    const GroupElt lo = K.group().rank() == 2 ? GroupElt(-2, 0) : GroupElt(-2);
    const GroupElt hi = K.group().rank() == 2 ? GroupElt(2, 0) : GroupElt(2);
    for (int n = 0; n < 100; ++n) {
      Series a = random_series(K, rng, lo, hi), b = random_series(K, rng, lo, hi);
      if (a.is_exact_zero() || b.is_exact_zero()) continue;
      Series ab = K.mul(a, b);
      CHECK(oracle::agree_below(oracle::to_map(ab), oracle::map_mul(K.residue(), oracle::to_map(a), oracle::to_map(b)),
                                std::nullopt));
      CHECK(*K.valuation(ab) == *K.valuation(a) + *K.valuation(b));
      Series s = K.add(a, b);
      if (s.is_exact_zero()) continue;
      auto va = *K.valuation(a), vb = *K.valuation(b), vs = *K.valuation(s);
      CHECK(vs >= std::min(va, vb));
      if (va != vb) CHECK(vs == std::min(va, vb));
      if (auto r = K.pth_root(a)) CHECK(K.frobenius(*r) == a);
    }
  }
}

TEST_CASE("higher input precision never changes reported terms") {
  Rng rng(9);
  auto K = field(2, GroupKind::IntInvP, 6);
  for (int n = 0; n < 60; ++n) {
    Series a = random_series(K, rng, GroupElt(-2), GroupElt(5), 4);
    Series b = random_series(K, rng, GroupElt(-1), GroupElt(5), 4);
    for (long lo_prec : {1, 2, 3}) {
      Series al = K.truncate(a, GroupElt(lo_prec)), bl = K.truncate(b, GroupElt(lo_prec));
      Series ah = K.truncate(a, GroupElt(lo_prec + 2)), bh = K.truncate(b, GroupElt(lo_prec + 2));
      if (!al.has_terms() || !bl.has_terms()) continue;
      for (auto op : {0, 1, 2}) {
        Series low = op == 0 ? K.add(al, bl) : op == 1 ? K.mul(al, bl) : K.invert(al, GroupElt(4));
        Series high = op == 0 ? K.add(ah, bh) : op == 1 ? K.mul(ah, bh) : K.invert(ah, GroupElt(4));
        CHECK(oracle::agree_below(oracle::to_map(low), oracle::to_map(high), low.precision()));
        if (low.precision() && high.precision()) CHECK(*high.precision() >= *low.precision());
      }
    }
  }
}

TEST_CASE("text form") {
  auto K = field(2, GroupKind::Lex2);
  Series a = K.add(K.monomial(K.residue().one(), GroupElt(-1, 2)), K.truncate(K.one(), GroupElt(1, 0)));
  CHECK(K.str(a) == "X^(-1, 2) + 1 + O(X^(1, 0))");
  CHECK(K.str(K.zero()) == "0");
}
