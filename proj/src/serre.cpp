#include "qtgl2/serre.hpp"

#include <algorithm>
#include <random>

namespace qtgl2 {

namespace {
FactoredValue checked_ratio(FactoredValue num, FactoredValue den) {
  if (den.is_zero())
    throw Error(ErrorKind::SubstitutionSingular, "denominator vanished at substitution");
  return num / den;
}
}  // namespace

FactoredValue serre_h(const Monomial& x, const Monomial& y) {
  return checked_ratio(FactoredValue::difference(x, Monomial::q2() * y).negated(),
                       FactoredValue::difference(y, Monomial::q2() * x));
}

FactoredValue serre_k(const Monomial& x, const Monomial& y) {
  return checked_ratio(FactoredValue::difference(x, Monomial::q1() * y) *
                           FactoredValue::difference(x, Monomial::q3() * y),
                       FactoredValue::difference(y, Monomial::q1() * x) *
                           FactoredValue::difference(y, Monomial::q3() * x));
}

namespace {

FieldElement serre_S(const Monomial& x1, const Monomial& x2, const Monomial& x3,
                     const Monomial& w) {
  FieldElement one(1);
  FieldElement f1 =
      one - (FactoredValue::from_monomial(Monomial::q2()) * serre_k(w, x3)).to_field();
  FieldElement f2 = one - (serre_h(x3, x2) * serre_k(w, x2)).to_field();
  FieldElement f3 =
      one - (FactoredValue::from_monomial(Monomial::q2(-1)) * serre_h(x3, x1) * serre_h(x2, x1) *
             serre_k(w, x1))
                .to_field();
  return f1 * f2 * f3;
}

}  // namespace

FieldElement serre_sum_at(const Monomial& z1, const Monomial& z2, const Monomial& z3,
                          const Monomial& w) {
  const Monomial zs[3] = {z1, z2, z3};
  int perm[3] = {0, 1, 2};
  FieldElement total(0);
  do {
    // boxes are applied in the order (perm[2], perm[1], perm[0]); a pair
    // (u < v) applied with u first picks up the reordering weight h(z_v, z_u)
    int order[3] = {perm[2], perm[1], perm[0]};
    FieldElement weight(1);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (order[i] < order[j]) weight *= serre_h(zs[order[j]], zs[order[i]]).to_field();
    total += serre_S(zs[perm[0]], zs[perm[1]], zs[perm[2]], w) * weight;
  } while (std::next_permutation(perm, perm + 3));
  return total;
}

FieldElement serre_degenerate_sum_at(const Monomial& p0, const Monomial& p3, bool use_q3) {
  Monomial g = use_q3 ? Monomial::q3() : Monomial::q1();
  Monomial p1 = g * p0;
  Monomial p2 = g.inverse() * p0;
  FieldElement h31 = serre_h(p3, p1).to_field();
  FieldElement k30 = serre_k(p3, p0).to_field();
  FieldElement h32 = serre_h(p3, p2).to_field();
  return FieldElement(1) + h31 - h31 * k30 - h31 * k30 * h32;
}

bool verify_serre_identity(int trials, uint64_t seed) {
  if (trials < 1) throw Error(ErrorKind::ConfigError, "trials must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int64_t> dist(-3, 3);
  auto random_monomial = [&] {
    Monomial::Exponents e;
    for (auto& x : e) x = dist(rng);
    return Monomial(e);
  };
  int done = 0, attempts = 0;
  while (done < trials) {
    if (++attempts > 50 * trials)
      throw Error(ErrorKind::SubstitutionSingular, "too many singular substitutions");
    try {
      if (!serre_sum_at(random_monomial(), random_monomial(), random_monomial(),
                        random_monomial())
               .is_zero())
        return false;
      if (!serre_degenerate_sum_at(random_monomial(), random_monomial(), false).is_zero())
        return false;
      if (!serre_degenerate_sum_at(random_monomial(), random_monomial(), true).is_zero())
        return false;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::SubstitutionSingular) continue;
      throw;
    }
    ++done;
  }
  return true;
}

}  // namespace qtgl2
