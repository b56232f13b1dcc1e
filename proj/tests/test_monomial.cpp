#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qtgl2/monomial.hpp"

using namespace qtgl2;

TEST_CASE("group law and identities") {
  CHECK((Monomial::q1() * Monomial::q2() * Monomial::q3()).is_one());
  Monomial x = Monomial::q(3) * Monomial::d(-2) * Monomial::kappa();
  CHECK(x * Monomial::one() == x);
  CHECK((x * x.inverse()).is_one());
  // q2^{-1} * q2^{-1} = q^{-4}
  CHECK(Monomial::q2(-1) * Monomial::q2(-1) == Monomial::q(-4));
}

TEST_CASE("genericity: random nonzero exponent tuples differ from 1") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int64_t> dist(-20, 20);
  int checked = 0;
  while (checked < 1000) {
    Monomial::Exponents e;
    for (auto& x : e) x = dist(rng);
    Monomial m(e);
    if (m.is_one()) continue;  // resample the zero tuple
    bool all_zero = true;
    for (int i = 0; i < Monomial::kGens; ++i)
      if (m.exp(i) != 0) all_zero = false;
    CHECK(!all_zero);
    ++checked;
  }
}

TEST_CASE("specialization is a homomorphism on the lattice") {
  Substitution s;
  s.images[1] = Monomial::q(-2);  // d -> q^-2, so q3 -> q
  CHECK(s.apply(Monomial::q3()) == Monomial::q());
  CHECK(s.apply(Monomial::one()).is_one());
  Substitution t;
  t.images[4] = Monomial::q3();  // kappa -> q3
  CHECK(t.apply(Monomial::kappa()) == Monomial::q(-1) * Monomial::d(-1));
  // erasing mu-dependence: q3 * u under u -> 1
  Substitution u;
  u.images[2] = Monomial::one();
  CHECK(u.apply(Monomial::q3() * Monomial::u()) == Monomial::q3());

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int64_t> dist(-5, 5);
  for (int i = 0; i < 200; ++i) {
    Monomial::Exponents e1, e2;
    for (auto& x : e1) x = dist(rng);
    for (auto& x : e2) x = dist(rng);
    Monomial a(e1), b(e2);
    CHECK(s.apply(a * b) == s.apply(a) * s.apply(b));
  }
}

TEST_CASE("parse and render") {
  CHECK(Monomial::parse("q^-2") == Monomial::q(-2));
  CHECK(Monomial::parse("q3") == Monomial::q3());
  CHECK(Monomial::parse("q1*kappa^2") == Monomial::q1() * Monomial::kappa(2));
  CHECK(Monomial::parse("1").is_one());
  CHECK(Monomial::q(2) * Monomial::d(-1) == Monomial::parse("q^2 d^-1"));
  CHECK(Monomial::one().str() == "1");
  CHECK_THROWS_AS(Monomial::parse("x"), Error);
}

TEST_CASE("substitution composition and parsing") {
  Substitution s = Substitution::parse("d=q^-2;kappa=q3");
  CHECK(s.apply(Monomial::d()) == Monomial::q(-2));
  // after d -> q^-2 the image of kappa = q3 = q^-1 d^-1 stays literal q3
  CHECK(s.apply(Monomial::kappa()) == Monomial::q3());
  Substitution both = Substitution::parse("kappa=q3").then(Substitution::parse("d=q^-2"));
  CHECK(both.apply(Monomial::kappa()) == Monomial::q());  // q3 under d=q^-2
}
