#pragma once
#include <cstdint>

#include "qtgl2/factored.hpp"

namespace qtgl2 {

/// h(x,y) = -(x - q2 y)/(y - q2 x),
/// k(x,y) = (x - q1 y)(x - q3 y)/((y - q1 x)(y - q3 x)).
/// Throw SubstitutionSingular when a denominator vanishes.
FactoredValue serre_h(const Monomial& x, const Monomial& y);
FactoredValue serre_k(const Monomial& x, const Monomial& y);

/// The six-permutation cubic-relation sum at a concrete substitution:
///   sum_pi S(z_{pi(1)}, z_{pi(2)}, z_{pi(3)}; w) * H_pi
/// with S(x1,x2,x3;w) = (1 - q2 k(w,x3)) (1 - h(x3,x2) k(w,x2))
///                      (1 - q2^{-1} h(x3,x1) h(x2,x1) k(w,x1))
/// and H_pi the product of h(z_v, z_u) over pairs u < v that the permutation
/// applies in inverted order. Identically zero.
FieldElement serre_sum_at(const Monomial& z1, const Monomial& z2, const Monomial& z3,
                          const Monomial& w);

/// Degenerate 4-term sum 1 + h(p3,p1) - h(p3,p1) k(p3,p0)
///                        - h(p3,p1) k(p3,p0) h(p3,p2)
/// at the constrained points p1 = g p0, p2 = g^{-1} p0 for g in {q1, q3}.
FieldElement serre_degenerate_sum_at(const Monomial& p0, const Monomial& p3, bool use_q3);

/// Exact randomized verification: `trials` nonsingular substitutions of the
/// 6-term identity plus the degenerate 4-term identity in both variants.
/// Singular draws are resampled. Returns true iff every evaluation is zero.
bool verify_serre_identity(int trials, uint64_t seed = 1);

}  // namespace qtgl2
