#include "qtgl2/action.hpp"

#include <algorithm>

namespace qtgl2 {

LWeightPair affine_root(int color, const Monomial& a) {
  // same-color component: -g_{ii}(a,z)/g_{ii}(z,a) = q2 (z - q2^{-1}a)/(z - q2 a)
  FactoredRatZ same = FactoredRatZ::from_factors(1, Monomial::q2(), {Monomial::q2(-1) * a},
                                                 {Monomial::q2() * a});
  // cross component: g(a,z)/g(z,a) = q2^{-1} (z - q1^{-1}a)(z - q3^{-1}a) /
  //                                          ((z - q1 a)(z - q3 a))
  FactoredRatZ cross = FactoredRatZ::from_factors(
      1, Monomial::q2(-1), {Monomial::q1(-1) * a, Monomial::q3(-1) * a},
      {Monomial::q1() * a, Monomial::q3() * a});
  LWeightPair w;
  if (color == 0) {
    w.c0 = same;
    w.c1 = cross;
  } else {
    w.c0 = cross;
    w.c1 = same;
  }
  return w;
}

FactoredValue g_eval_factored(int i, int j, const Monomial& a, const Monomial& b) {
  if (((i ^ j) & 1) == 0) return FactoredValue::difference(a, Monomial::q2() * b);
  return FactoredValue::difference(a, Monomial::q1() * b) *
         FactoredValue::difference(a, Monomial::q3() * b);
}

FieldElement g_eval(int i, int j, const Monomial& a, const Monomial& b) {
  return g_eval_factored(i, j, a, b).to_field();
}

LWeightPair lweight(const Family& f, const State& s) {
  LWeightPair w = f.psi();
  for (const auto& b : s.plus) w *= affine_root(b.color, f.position_of(b)).inverse();
  for (const auto& b : s.minus) w *= affine_root(b.color, f.position_of(b));
  return w;
}

LWeightPair act_K(const Family& f, const State& s) {
  if (!f.is_valid(s)) throw Error(ErrorKind::InvalidState, "invalid state: " + s.key());
  return lweight(f, s);
}

Split lweight_split(const Family& f, const State& s, const Box& b) {
  Split sp;
  (b.negative() ? sp.after : sp.before) = f.psi();
  auto place = [&](const Box& x, const LWeightPair& factor) {
    int c = box_order(f, x, b);
    if (c < 0)
      sp.before *= factor;
    else if (c > 0)
      sp.after *= factor;
    // x == b contributes to neither part
  };
  for (const auto& x : s.plus) place(x, affine_root(x.color, f.position_of(x)).inverse());
  for (const auto& x : s.minus) place(x, affine_root(x.color, f.position_of(x)));
  return sp;
}

FactoredValue transition_coeff_F(const Family& f, const State& s, const Box& b) {
  Split sp = lweight_split(f, s, b);
  const FactoredRatZ& after = sp.after.component(b.color);
  Monomial p = f.position_of(b);
  if (!b.negative()) return after.eval_factored(p);
  return after.residue_factored(p).negated() / FactoredValue::q_minus_qinv();
}

FactoredValue transition_coeff_E(const Family& f, const State& s, const Box& b) {
  Split sp = lweight_split(f, s, b);
  const FactoredRatZ& before = sp.before.component(b.color);
  Monomial p = f.position_of(b);
  if (!b.negative()) return before.residue_factored(p) / FactoredValue::q_minus_qinv();
  return before.eval_factored(p);
}

namespace {

TransitionSet act_impl(const Family& f, const State& s, int color, bool is_f) {
  Moves mv = concave_convex(f, s);
  const std::vector<Box>& boxes = is_f ? mv.concave[color & 1] : mv.convex[color & 1];
  TransitionSet out;
  std::vector<Monomial> supports;
  for (const auto& b : boxes) {
    FactoredValue c = is_f ? transition_coeff_F(f, s, b) : transition_coeff_E(f, s, b);
    if (c.is_zero()) continue;
    Transition t;
    t.box = b;
    t.target = is_f ? with_box_added(s, b) : with_box_removed(s, b);
    t.support = f.position_of(b);
    t.coeff = std::move(c);
    supports.push_back(t.support);
    out.items.push_back(std::move(t));
  }
  std::sort(supports.begin(), supports.end());
  if (std::adjacent_find(supports.begin(), supports.end()) != supports.end())
    throw Error(ErrorKind::InvalidState, "transition supports collide for state " + s.key());
  std::sort(out.items.begin(), out.items.end(),
            [](const Transition& a, const Transition& b) { return a.box < b.box; });
  return out;
}

}  // namespace

TransitionSet act_F(const Family& f, const State& s, int color) {
  return act_impl(f, s, color, true);
}

TransitionSet act_E(const Family& f, const State& s, int color) {
  return act_impl(f, s, color, false);
}

}  // namespace qtgl2
