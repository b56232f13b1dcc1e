#pragma once
#include <vector>

#include "qtgl2/family.hpp"

namespace qtgl2 {

/// A_{i,a}: the pair by which an l-weight changes when a box of color i at
/// position a is removed (multiplication) or added (division).
LWeightPair affine_root(int color, const Monomial& a);

/// g_{i,j}(a,b): a - q2 b for equal colors, (a - q1 b)(a - q3 b) otherwise.
FactoredValue g_eval_factored(int i, int j, const Monomial& a, const Monomial& b);
FieldElement g_eval(int i, int j, const Monomial& a, const Monomial& b);

/// l-weight of a state: psi * prod_{plus} A^{-1} * prod_{minus} A.
LWeightPair lweight(const Family& f, const State& s);
/// same as lweight; errors on invalid states
LWeightPair act_K(const Family& f, const State& s);

/// l-weight split at a box. The reference part psi sits with the boxes that
/// precede the reference marker: in `before` for positive b, in `after` for
/// negative b (negative boxes order below the reference).
struct Split {
  LWeightPair before, after;
};
Split lweight_split(const Family& f, const State& s, const Box& b);

struct Transition {
  Box box;
  State target;
  Monomial support;
  FactoredValue coeff;
};

/// One entry per concave/convex box; zero coefficients are omitted (they
/// correspond to transitions annihilated by a specialization).
struct TransitionSet {
  std::vector<Transition> items;
};

TransitionSet act_F(const Family& f, const State& s, int color);
TransitionSet act_E(const Family& f, const State& s, int color);

/// raw coefficient for one box (possibly zero), without the nonzero filter
FactoredValue transition_coeff_F(const Family& f, const State& s, const Box& b);
FactoredValue transition_coeff_E(const Family& f, const State& s, const Box& b);

}  // namespace qtgl2
