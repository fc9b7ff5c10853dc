#include "doctest.h"
#include "oracles.hpp"
#include "valuata/error.hpp"
#include "valuata/random.hpp"
#include "valuata/residue_field.hpp"

using namespace valuata;

TEST_CASE("finite field arithmetic") {
  auto gf4 = ResidueField::finite(4);
  ResidueElt w = gf4.constant(2);  // digits (0, 1): w
  CHECK(gf4.str(w) == "w");
  CHECK(gf4.str(gf4.frobenius(w)) == "w+1");
  auto gf3 = ResidueField::finite(3);
  CHECK(gf3.pow(gf3.from_int(2), 3) == gf3.from_int(2));
  CHECK_THROWS_AS(gf3.inv(gf3.zero()), DivisionByZero);
}

TEST_CASE("x^q == x and Frobenius additivity match the schoolbook oracle") {
  for (long q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 32, 64}) {
    auto k = GaloisField::of_order(q);
    for (GFElt a = 0; a < k->order(); ++a) {
      CHECK(k->pow(a, q) == a);
      for (GFElt b = 0; b < k->order(); b += 1 + k->order() / 9) {
        REQUIRE(k->mul(a, b) == oracle::gf_mul(*k, a, b));
        CHECK(k->frobenius(k->add(a, b)) == k->add(k->frobenius(a), k->frobenius(b)));
      }
    }
  }
}

TEST_CASE("rational functions") {
  auto k = ResidueField::rational_functions(2);
  ResidueElt y = k.y();
  CHECK(k.str(k.inv(y)) == "1/y");
  CHECK(k.str(k.fraction({1, 1}, {0, 0, 1})) == "(y+1)/y^2");
  CHECK(k.mul(k.inv(y), y) == k.one());
  CHECK_FALSE(k.pth_root(y).has_value());
  CHECK(k.pth_root(k.mul(y, y)) == y);
  CHECK(k.pth_root(k.one()) == k.one());
  ResidueElt frac = k.fraction({1, 1}, {0, 1, 1});  // (1+y)/(y+y^2) = 1/y
  CHECK(frac == k.inv(y));
  CHECK_THROWS_AS(ResidueField::finite(2).y(), UsageError);
}

TEST_CASE("Artin-Schreier preimages over finite fields") {
  auto gf2 = ResidueField::finite(2);
  CHECK_FALSE(gf2.artin_schreier_preimage(gf2.one()).has_value());
  CHECK(gf2.artin_schreier_preimage(gf2.zero()).has_value());
  auto gf4 = ResidueField::finite(4);
  CHECK_FALSE(gf4.artin_schreier_preimage(gf4.constant(2)).has_value());
  CHECK(gf4.artin_schreier_preimage(gf4.one()).has_value());  // w^2 + w = 1

  for (long q : {2, 3, 4, 5, 8, 9, 16, 25, 27, 32, 64}) {
    auto k = ResidueField::finite(q);
    const GaloisField& b = k.base();
    for (GFElt c = 0; c < b.order(); ++c) {
      auto brute = oracle::as_preimages(b, c);
      auto x = k.artin_schreier_preimage(k.constant(c));
      CHECK(x.has_value() == !brute.empty());
      CHECK(x.has_value() == (b.trace(c) == 0));
      if (x) CHECK(k.sub(k.frobenius(*x), *x) == k.constant(c));
    }
  }
}

TEST_CASE("Artin-Schreier solve over rational functions") {
  for (long q : {2, 3, 4}) {
    auto k = ResidueField::rational_functions(q);
    Rng rng(static_cast<unsigned long>(q));
    for (int n = 0; n < 60; ++n) {
      ResidueElt x = random_residue(k, rng);
      ResidueElt c = k.sub(k.frobenius(x), x);
      auto sol = k.artin_schreier_solve(c);
      REQUIRE(sol.x.has_value());
      CHECK(k.sub(k.frobenius(*sol.x), *sol.x) == c);
      CHECK(sol.degree_bound >= 1);
    }
  }
  auto k2 = ResidueField::rational_functions(2);
  // y is not x^2 - x: the polynomial part would need odd-degree cancellation.
  CHECK_FALSE(k2.artin_schreier_preimage(k2.y()).has_value());
  CHECK_FALSE(k2.artin_schreier_preimage(k2.inv(k2.y())).has_value());
  CHECK(k2.artin_schreier_preimage(k2.add(k2.pow(k2.y(), 2), k2.y())) == k2.y());
}

TEST_CASE("pth_root round trip and the derivative criterion") {
  for (long q : {2, 3, 4, 9}) {
    auto k = ResidueField::rational_functions(q);
    Rng rng(100 + static_cast<unsigned long>(q));
    for (int n = 0; n < 100; ++n) {
      ResidueElt x = random_residue(k, rng);
      CHECK(k.pth_root(k.frobenius(x)) == x);
      bool oracle_says = oracle::poly_is_pth_power(x.num, k.p()) && oracle::poly_is_pth_power(x.den, k.p());
      CHECK(k.pth_root(x).has_value() == oracle_says);
    }
  }
}

TEST_CASE("square-free factorization reassembles") {
  auto k = GaloisField::of_order(3);
  GFPoly a = gfpoly::mul(*k, gfpoly::pow(*k, {1, 1}, 4), gfpoly::pow(*k, {2, 0, 1}, 3));
  auto parts = gfpoly::squarefree_factorization(*k, a);
  GFPoly back{1};
  for (auto& [f, m] : parts) back = gfpoly::mul(*k, back, gfpoly::pow(*k, f, static_cast<unsigned>(m)));
  CHECK(back == gfpoly::monic(*k, a));
}

TEST_CASE("field descriptors") {
  CHECK(ResidueField::parse("gf:9").name() == "gf:9");
  CHECK(ResidueField::parse("ratfunc:2").name() == "ratfunc:2");
  CHECK_THROWS_AS(ResidueField::parse("gf:6"), UsageError);
  CHECK_THROWS_AS(ResidueField::parse("field"), UsageError);
}
