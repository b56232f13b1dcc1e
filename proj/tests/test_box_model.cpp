#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "qtgl2/action.hpp"
#include "qtgl2/family.hpp"

using namespace qtgl2;

namespace {
Box plain_box(int64_t x, int64_t y, int64_t z, int color = 0, int group = 0,
              BoxSign sign = BoxSign::positive) {
  Box b;
  b.color = int8_t(color);
  b.sign = sign;
  b.coord = {{x, 0, 0}, {y, 0, 0}, {z, 0, 0}};
  b.group = int8_t(group);
  return b;
}
}  // namespace

TEST_CASE("positions") {
  CHECK(position(plain_box(0, 0, 0)).is_one());
  // (k,0,0) -> q1^{-k}
  for (int64_t k : {int64_t(-3), int64_t(1), int64_t(5)})
    CHECK(position(plain_box(k, 0, 0)) == Monomial::q1(-k));
  // (0, mu+nu, 0) -> u^2 v^2  (q2^{-mu-nu})
  Box b;
  b.coord = {{0, 0, 0}, {0, 1, 1}, {0, 0, 0}};
  CHECK(position(b) == Monomial::u(2) * Monomial::v(2));
  // mixed shift: (0, 1+mu, 0) -> q2^{-1} u^2
  b.coord.y = {1, 1, 0};
  CHECK(position(b) == Monomial::q2(-1) * Monomial::u(2));
}

TEST_CASE("lexicographic order y > z > x") {
  std::vector<int> ranks = {0};
  CHECK(compare_boxes(plain_box(0, 1, 0), plain_box(5, 0, 3), ranks) > 0);
  CHECK(compare_boxes(plain_box(0, 0, 1), plain_box(3, 0, 0), ranks) > 0);
  CHECK(compare_boxes(plain_box(2, 0, 0), plain_box(3, 0, 0), ranks) < 0);
  // negative boxes sort below positive ones regardless of coordinates
  Box neg = plain_box(9, 9, 9, 0, 0, BoxSign::negative);
  CHECK(compare_boxes(neg, plain_box(0, 0, 0), ranks) < 0);
}

TEST_CASE("cross-group order follows family ranks") {
  FamilySpec rel = make_relaxed_verma();
  State st = rel->parse_state("1|1|1");
  Box bottom, pedestal, tower;
  for (const auto& b : st.plus) {
    if (b.group == 0) bottom = b;
    if (b.group == 1) pedestal = b;
    if (b.group == 2) tower = b;
  }
  CHECK(box_order(*rel, tower, pedestal) > 0);
  CHECK(box_order(*rel, pedestal, bottom) > 0);
  CHECK(box_order(*rel, tower, bottom) > 0);
}

TEST_CASE("order is strict and transitive on random family triples") {
  FamilySpec fam = make_slanted(2);
  auto states = enumerate_states(*fam, 3);
  std::vector<Box> boxes;
  for (const auto& s : states) {
    for (const auto& b : s.plus) boxes.push_back(b);
    for (const auto& b : s.minus) boxes.push_back(b);
  }
  std::sort(boxes.begin(), boxes.end());
  boxes.erase(std::unique(boxes.begin(), boxes.end()), boxes.end());
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    const Box& a = boxes[rng() % boxes.size()];
    const Box& b = boxes[rng() % boxes.size()];
    const Box& c = boxes[rng() % boxes.size()];
    int ab = box_order(*fam, a, b), ba = box_order(*fam, b, a);
    CHECK(ab == -ba);
    if (a == b) CHECK(ab == 0);
    if (ab < 0 && box_order(*fam, b, c) < 0) CHECK(box_order(*fam, a, c) < 0);
  }
}

TEST_CASE("state degree") {
  FamilySpec fock = make_fock(0);
  CHECK(state_degree(fock->reference()) == std::pair<int64_t, int64_t>{0, 0});
  CHECK(state_degree(fock->parse_state("4,2,1")) == std::pair<int64_t, int64_t>{4, 3});
  FamilySpec vec = make_vector(0);
  CHECK(state_degree(vec->parse_state("-2")) == std::pair<int64_t, int64_t>{-1, -1});
}

TEST_CASE("coloring rule holds across generated universes") {
  for (const FamilySpec& fam :
       {make_fock(0), make_macmahon(0), make_eval_verma(0), make_relaxed_verma(), make_slanted(1),
        make_slanted(2)}) {
    auto states = enumerate_states(*fam, 3);
    std::vector<Box> boxes;
    for (const auto& s : states) {
      for (const auto& b : s.plus) boxes.push_back(b);
      for (const auto& b : s.minus) boxes.push_back(b);
    }
    for (const auto& a : boxes)
      for (const auto& b : boxes) {
        // the coloring constraint applies when x and z differ by integers
        if (!a.coord.x.same_shift(b.coord.x) || !a.coord.z.same_shift(b.coord.z)) continue;
        int64_t diff = (a.coord.x.n - b.coord.x.n) + (a.coord.z.n - b.coord.z.n);
        CHECK(((a.color - b.color) % 2 + 2) % 2 == ((diff % 2) + 2) % 2);
      }
  }
}

TEST_CASE("no two distinct boxes share a position within a family truncation") {
  for (const FamilySpec& fam : {make_relaxed_verma(), make_slanted(1)}) {
    auto states = enumerate_states(*fam, 3);
    std::map<std::string, Box> by_pos;
    for (const auto& s : states)
      for (const auto& list : {s.plus, s.minus})
        for (const auto& b : list) {
          auto [it, fresh] = by_pos.emplace(fam->position_of(b).str(), b);
          if (!fresh) CHECK(it->second.coord == b.coord);
        }
  }
}

TEST_CASE("lweight split recombination") {
  FamilySpec fock = make_fock(0);
  State s = fock->parse_state("3,1");
  std::vector<Box> all;
  for (const auto& st : enumerate_states(*fock, 5))
    for (const auto& b : st.plus) all.push_back(b);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  LWeightPair full = lweight(*fock, s);
  for (const auto& b : all) {
    Split sp = lweight_split(*fock, s, b);
    LWeightPair product = sp.before * sp.after;
    if (s.contains_plus(b)) product *= affine_root(b.color, fock->position_of(b)).inverse();
    CHECK(product == full);
  }
  // a box smaller than every box of the state: before = psi
  State tiny = fock->parse_state("1");
  Split sp = lweight_split(*fock, tiny, tiny.plus.front());
  CHECK(sp.before == fock->psi());
  CHECK(sp.after == LWeightPair::one());
}

TEST_CASE("vector split: after-part of the top box is trivial") {
  FamilySpec vec = make_vector(0);
  for (int64_t k : {int64_t(1), int64_t(2), int64_t(5)}) {
    State s = vec->parse_state(std::to_string(k));
    Box top = s.plus.back();
    CHECK(top.coord.x.n == k - 1);
    Split sp = lweight_split(*vec, s, top);
    CHECK(sp.after == LWeightPair::one());
  }
}

TEST_CASE("trivial lemma: adding/removing a box multiplies by the affine root") {
  std::mt19937_64 rng(23);
  for (const FamilySpec& fam : {make_fock(0), make_macmahon(0), make_relaxed_verma()}) {
    auto states = enumerate_states(*fam, 4);
    for (int t = 0; t < 30; ++t) {
      const State& s = states[rng() % states.size()];
      Moves mv = concave_convex(*fam, s);
      for (int c = 0; c < 2; ++c) {
        for (const auto& b : mv.concave[c]) {
          LWeightPair lhs = lweight(*fam, with_box_added(s, b));
          CHECK(lhs == affine_root(c, fam->position_of(b)).inverse() * lweight(*fam, s));
        }
        for (const auto& b : mv.convex[c]) {
          LWeightPair lhs = lweight(*fam, with_box_removed(s, b));
          CHECK(lhs == affine_root(c, fam->position_of(b)) * lweight(*fam, s));
        }
      }
    }
  }
}
