#include "doctest.h"
#include "oracles.hpp"
#include "valuata/as_extension.hpp"
#include "valuata/error.hpp"
#include "valuata/random.hpp"

using namespace valuata;

namespace {

SeriesField field(long q, GroupKind g, long prec = 10, bool ratfunc = false) {
  auto k = ratfunc ? ResidueField::rational_functions(q) : ResidueField::finite(q);
  return {k, ValueGroup{g, k.p()}, g == GroupKind::Lex2 ? GroupElt(mpq_class(prec), 0) : GroupElt(prec)};
}

Series X(const SeriesField& K, long num, long den = 1) {
  return K.monomial(K.residue().one(), GroupElt::ratio(num, den));
}

ExtElt random_elt(const ASExtension& L, Rng& rng, const GroupElt& lo, const GroupElt& hi) {
  std::vector<Series> c;
  for (int i = 0; i < L.p(); ++i) c.push_back(rng.coin(4) ? L.base().zero() : random_series(L.base(), rng, lo, hi, 2));
  return L.make(std::move(c));
}

bool same(const ASExtension& L, const ExtElt& a, const ExtElt& b) { return L.equal_to_precision(a, b); }

}  // namespace

TEST_CASE("defining relation") {
  auto K2 = field(2, GroupKind::Int);
  Series f = X(K2, -3);
  ASExtension L(K2, f);
  ExtElt a = L.alpha();
  CHECK(same(L, L.mul(a, a), L.add(a, L.from_base(f))));
  ExtElt one_a = L.add(L.one(), a);
  CHECK(same(L, L.mul(one_a, one_a), L.add(one_a, L.from_base(f))));

  auto K3 = field(3, GroupKind::Int);
  ASExtension L3(K3, X(K3, -1));
  CHECK(same(L3, L3.mul(L3.alpha(), L3.mul(L3.alpha(), L3.alpha())), L3.add(L3.alpha(), L3.from_base(X(K3, -1)))));
}

TEST_CASE("sigma") {
  auto K = field(2, GroupKind::Int);
  ASExtension L(K, X(K, -3));
  CHECK(same(L, L.sigma(L.alpha(), 1), L.add(L.alpha(), L.one())));
  CHECK(same(L, L.sigma(L.from_base(X(K, 2)), 1), L.from_base(X(K, 2))));
  CHECK(same(L, L.sigma(L.sigma(L.alpha(), 1), 1), L.alpha()));
  CHECK_THROWS_AS(L.sigma(L.alpha(), 2), UsageError);

  auto K3 = field(3, GroupKind::Int);
  ASExtension L3(K3, X(K3, -2));
  Rng rng(3);
  for (int n = 0; n < 30; ++n) {
    ExtElt a = random_elt(L3, rng, GroupElt(-2), GroupElt(2));
    ExtElt b = random_elt(L3, rng, GroupElt(-2), GroupElt(2));
    CHECK(same(L3, L3.sigma(L3.sigma(L3.sigma(a, 1), 1), 1), a));
    CHECK(same(L3, L3.sigma(L3.mul(a, b), 1), L3.mul(L3.sigma(a, 1), L3.sigma(b, 1))));
    CHECK(same(L3, L3.sigma(a, 2), L3.sigma(L3.sigma(a, 1), 1)));
  }
}

TEST_CASE("norm and trace") {
  auto K2 = field(2, GroupKind::Int);
  ASExtension L2(K2, X(K2, -3));
  CHECK(L2.norm(L2.alpha()) == X(K2, -3));
  CHECK(L2.trace(L2.alpha()) == K2.one());
  auto K3 = field(3, GroupKind::Int);
  ASExtension L3(K3, X(K3, -1));
  CHECK(L3.norm(L3.alpha()) == X(K3, -1));
  CHECK(L3.trace(L3.alpha()) == K3.zero());
}

TEST_CASE("valuation_L") {
  auto K = field(2, GroupKind::Int);
  ASExtension L(K, X(K, -3));
  CHECK(L.valuation(L.alpha()) == GroupElt::ratio(-3, 2));
  CHECK(L.valuation(L.from_base(X(K, 5))) == GroupElt(5));
  auto H = field(2, GroupKind::IntInvP);
  ASExtension LH(H, X(H, -1));
  CHECK(LH.valuation(LH.alpha()) == GroupElt::ratio(-1, 2));

  ASExtension T(K, X(K, 1));
  CHECK(T.is_trivial());
  CHECK_THROWS_AS(T.valuation(T.alpha()), DomainError);
  auto K4 = field(4, GroupKind::Int);
  CHECK(ASExtension(K4, K4.one()).is_trivial());
  CHECK_FALSE(ASExtension(K4, K4.constant(K4.residue().constant(2))).is_trivial());
}

TEST_CASE("invert_ext") {
  auto K = field(2, GroupKind::Int);
  ASExtension L(K, X(K, -3));
  CHECK(same(L, L.mul(L.invert(L.alpha()), L.alpha()), L.one()));
  ExtElt c = L.from_base(L.base().add(K.one(), X(K, 1)));
  CHECK(same(L, L.invert(c), L.from_base(K.invert(c.coeffs[0]))));
  ExtElt b = L.add(L.one(), L.alpha());
  CHECK(same(L, L.mul(L.invert(b), b), L.one()));
}

TEST_CASE("conjugate-product norm equals the determinant and the laws hold on samples") {
  Rng rng(21);
  struct Family {
    SeriesField K;
    Series f;
  };
  auto K1 = field(2, GroupKind::Int), K2 = field(2, GroupKind::IntInvP), K3 = field(3, GroupKind::Int),
       K4 = field(2, GroupKind::Int, 10, true), K5 = field(2, GroupKind::Lex2);
  std::vector<Family> fams = {
      {K1, X(K1, -3)},
      {K2, X(K2, -1)},
      {K3, K3.add(X(K3, -2), X(K3, -1))},
      {K4, K4.shift(K4.one(), K4.residue().y(), GroupElt(-2))},
      {K5, K5.monomial(K5.residue().one(), GroupElt(-1, 0))},
  };
  for (const auto& fam : fams) {
    ASExtension L(fam.K, fam.f);
    const GroupElt lo = fam.K.group().rank() == 2 ? GroupElt(-1, 0) : GroupElt(-1);
    const GroupElt hi = fam.K.group().rank() == 2 ? GroupElt(2, 0) : GroupElt(2);
    for (int n = 0; n < 40; ++n) {
      ExtElt a = random_elt(L, rng, lo, hi), b = random_elt(L, rng, lo, hi);
      CHECK(fam.K.equal_to_precision(L.norm(a), L.norm_by_determinant(a)));
      CHECK(fam.K.equal_to_precision(L.trace(a), L.trace_by_matrix(a)));
      CHECK(fam.K.equal_to_precision(L.norm(L.mul(a, b)), fam.K.mul(L.norm(a), L.norm(b))));
      CHECK(fam.K.equal_to_precision(L.trace(L.add(a, b)), fam.K.add(L.trace(a), L.trace(b))));
      if (L.is_zero_to_precision(a) || L.is_zero_to_precision(b)) continue;
      CHECK(L.valuation(L.mul(a, b)) == L.valuation(a) + L.valuation(b));
    }
  }
}

TEST_CASE("ferocious valuation is the minimum over the mu-basis") {
  // f = y X^-2 over GF(2)(y): mu = X alpha satisfies mu^2 - X mu = y.
  auto K = field(2, GroupKind::Int, 12, true);
  ASExtension L(K, K.shift(K.one(), K.residue().y(), GroupElt(-2)));
  ExtElt mu = L.scale(L.alpha(), X(K, 1));
  Rng rng(17);
  for (int n = 0; n < 50; ++n) {
    Series x0 = random_series(K, rng, GroupElt(-3), GroupElt(3), 2);
    Series x1 = random_series(K, rng, GroupElt(-3), GroupElt(3), 2);
    ExtElt a = L.add(L.from_base(x0), L.scale(mu, x1));
    GroupElt expected = std::min(*K.valuation(x0), *K.valuation(x1));
    CHECK(L.valuation(a) == expected);
  }
}
