#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qtgl2/action.hpp"
#include "qtgl2/rational_z.hpp"

using namespace qtgl2;

namespace {
std::mt19937_64 rng(3);
Monomial random_monomial(int range = 3) {
  std::uniform_int_distribution<int64_t> d(-range, range);
  Monomial::Exponents e;
  for (auto& x : e) x = d(rng);
  return Monomial(e);
}
// random product of balanced elementary pair-components (simple poles, generic)
FactoredRatZ random_balanced(int factors) {
  FactoredRatZ f;
  for (int i = 0; i < factors; ++i) {
    Monomial a = random_monomial();
    FactoredRatZ w = weight_0(a).c0;  //  (qz-a)/(z-aq)
    f *= (rng() & 1) ? w : w.inverse();
  }
  return f;
}
}  // namespace

TEST_CASE("inverse and cancellation") {
  FactoredRatZ f = weight_0(random_monomial()).c0;
  CHECK(f * f.inverse() == FactoredRatZ::one());
  // 0_a * 0_a^{-1} = 1 on the pair level
  LWeightPair w = weight_0(Monomial::q3());
  CHECK(w * w.inverse() == LWeightPair::one());
}

TEST_CASE("affine root factorization into fundamental-pair factors") {
  // A_{0,a} = 0_{q^{-1}a} 0_{qa} 1^{-1}_{q1 q a} 1^{-1}_{q3 q a}
  Monomial a = random_monomial();
  LWeightPair lhs = affine_root(0, a);
  LWeightPair rhs = weight_0(Monomial::q(-1) * a) * weight_0(Monomial::q() * a) *
                    weight_1(Monomial::q1() * Monomial::q() * a).inverse() *
                    weight_1(Monomial::q3() * Monomial::q() * a).inverse();
  CHECK(lhs == rhs);
  // color swap symmetry
  LWeightPair lhs1 = affine_root(1, a);
  LWeightPair rhs1 = weight_1(Monomial::q(-1) * a) * weight_1(Monomial::q() * a) *
                     weight_0(Monomial::q1() * Monomial::q() * a).inverse() *
                     weight_0(Monomial::q3() * Monomial::q() * a).inverse();
  CHECK(lhs1 == rhs1);
}

TEST_CASE("evaluation") {
  CHECK(FactoredRatZ::one().eval(random_monomial()).is_one());
  // A_{0,a}(a) = (-1, 1)
  Monomial a = random_monomial();
  LWeightPair A = affine_root(0, a);
  CHECK(A.c0.eval(a) == -FieldElement(1));
  CHECK(A.c1.eval(a).is_one());
  LWeightPair A1 = affine_root(1, a);
  CHECK(A1.c0.eval(a).is_one());
  CHECK(A1.c1.eval(a) == -FieldElement(1));
  // balance: f(0) f(inf) = 1 for (qz-a)/(z-aq)
  FactoredRatZ f = weight_0(a).c0;
  CHECK((f.value_at_zero() * f.value_at_infinity()).is_one());
  CHECK_THROWS_AS(f.eval(a * Monomial::q()), Error);
}

TEST_CASE("A symmetries at random points") {
  for (int t = 0; t < 20; ++t) {
    Monomial a = random_monomial(), b = random_monomial();
    for (int i = 0; i < 2; ++i) {
      LWeightPair lhs = affine_root(i, a);
      LWeightPair unit = affine_root(i, Monomial::one());
      // A_{i,a}(b) = A_{i,1}(b/a)
      for (int c = 0; c < 2; ++c) {
        if (!lhs.component(c).regular_at(b)) continue;
        CHECK(lhs.component(c).eval(b) == unit.component(c).eval(b / a));
        // A_{i,a}(b) = A_{i,b}^{-1}(a)
        CHECK(lhs.component(c).eval(b) ==
              affine_root(i, b).component(c).inverse().eval(a));
      }
    }
  }
}

TEST_CASE("residues") {
  // res_{z=aq} (qz-a)/(z-aq) dz/z = (q aq - a)/(aq) = q - q^{-1}
  Monomial a = random_monomial();
  FactoredRatZ f = weight_0(a).c0;
  FieldElement expect = FieldElement::from_poly(
      LaurentPoly::difference(Monomial::q(), Monomial::q(-1)));
  CHECK(f.residue(a * Monomial::q()) == expect);
  // Macmahon Psi component: (z kappa - kappa^{-1})/(z - 1), residue at 1
  FactoredRatZ psi = FactoredRatZ::from_factors(1, Monomial::kappa(), {Monomial::kappa(-2)},
                                                {Monomial::one()});
  CHECK(psi.residue(Monomial::one()) ==
        FieldElement::from_poly(
            LaurentPoly::difference(Monomial::kappa(), Monomial::kappa(-1))));
  CHECK_THROWS_AS(f.residue(random_monomial() * Monomial::d(7)), Error);
  // double pole is rejected
  FactoredRatZ dbl = FactoredRatZ::from_factors(
      1, Monomial::one(), {a}, {a * Monomial::q(), a * Monomial::q()});
  CHECK_THROWS_AS(dbl.residue(a * Monomial::q()), Error);
}

TEST_CASE("properties") {
  Monomial a = random_monomial();
  auto pr = weight_0(a).c0.properties();
  CHECK(pr.balanced);
  CHECK(pr.simple_poles_only);
  REQUIRE(pr.poles.size() == 1);
  CHECK(pr.poles[0] == a * Monomial::q());

  auto dbl = FactoredRatZ::from_factors(1, Monomial::one(), {a},
                                        {a * Monomial::q(), a * Monomial::q()});
  CHECK(!dbl.properties().simple_poles_only);
  CHECK(!dbl.properties().balanced);
}

TEST_CASE("rz_mul commutative and associative on random factored functions") {
  for (int t = 0; t < 20; ++t) {
    FactoredRatZ f = random_balanced(3), g = random_balanced(2), h = random_balanced(2);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
  }
}

TEST_CASE("partial fractions: sum of residues equals f(inf) - f(0)") {
  for (int t = 0; t < 25; ++t) {
    FactoredRatZ f = random_balanced(4);
    auto pr = f.properties();
    if (!pr.simple_poles_only) continue;
    REQUIRE(pr.balanced);
    FieldElement sum(0);
    for (const auto& p : pr.poles) sum += f.residue(p);
    FieldElement expect = f.value_at_infinity().to_field() - f.value_at_zero().to_field();
    CHECK(sum == expect);
  }
}

TEST_CASE("scaling the argument") {
  Monomial a = random_monomial(), s = random_monomial();
  FactoredRatZ f = weight_0(a).c0;
  // f(z/s) has zeros and poles multiplied by s, same value at infinity
  FactoredRatZ g = f.scaled(s);
  CHECK(g.poles()[0] == a * Monomial::q() * s);
  CHECK(g.value_at_infinity().equals(f.value_at_infinity()));
}

TEST_CASE("specialization cancels newly equal factors") {
  // (z - kappa^-2)/(z - q2^-1) collapses to 1 under kappa -> q
  FactoredRatZ f = FactoredRatZ::from_factors(1, Monomial::one(), {Monomial::kappa(-2)},
                                              {Monomial::q2(-1)});
  Substitution s;
  s.images[4] = Monomial::q();
  CHECK(f.specialized(s) == FactoredRatZ::one());
}
