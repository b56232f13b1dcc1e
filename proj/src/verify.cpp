#include "qtgl2/verify.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace qtgl2 {

nlohmann::json Witness::to_json() const {
  nlohmann::json j = detail;
  j["relation"] = relation;
  j["state"] = state;
  j["pass"] = false;
  return j;
}

nlohmann::json AssumptionReport::to_json() const {
  nlohmann::json w = nlohmann::json::array();
  for (const auto& x : witnesses) w.push_back(x.to_json());
  return {{"A1", pass[0]}, {"A2", pass[1]}, {"A3", pass[2]}, {"A4", pass[3]}, {"A5", pass[4]},
          {"witnesses", w}};
}

nlohmann::json RelationReport::to_json() const {
  nlohmann::json w = nlohmann::json::array();
  for (const auto& x : failures) w.push_back(x.to_json());
  return {{"checked", checked}, {"failures", w}, {"pass", failures.empty()}};
}

// ---------------------------------------------------------------------------
// assumptions

AssumptionReport check_assumptions(const Family& f, const std::vector<State>& states) {
  AssumptionReport rep;
  auto fail = [&](int idx, const State& s, nlohmann::json detail) {
    rep.pass[idx - 1] = false;
    if (rep.witnesses.size() < 64)
      rep.witnesses.push_back({"A" + std::to_string(idx), s.key(), std::move(detail)});
  };

  // A1: l-weights pairwise distinct
  std::map<std::string, std::string> seen;
  for (const auto& s : states) {
    std::string lw = lweight(f, s).to_json().dump();
    auto [it, fresh] = seen.emplace(lw, s.key());
    if (!fresh) fail(1, s, {{"collides_with", it->second}});
  }

  for (const auto& s : states) {
    LWeightPair lw = lweight(f, s);
    Moves mv;
    try {
      mv = concave_convex(f, s);
    } catch (const Error& e) {
      fail(3, s, {{"error", e.what()}});
      continue;
    }

    for (int i = 0; i < 2; ++i) {
      auto pr = lw.component(i).properties();
      if (!pr.balanced) fail(2, s, {{"component", i}, {"issue", "not balanced"}});
      if (!pr.simple_poles_only) {
        std::string dp;
        for (size_t k = 1; k < pr.poles.size(); ++k)
          if (pr.poles[k] == pr.poles[k - 1]) dp = pr.poles[k].str();
        fail(2, s, {{"component", i}, {"issue", "double pole"}, {"pole", dp}});
      }

      // A3: positions of CC_i + CV_i == pole multiset of component i
      std::vector<Monomial> positions;
      for (const auto& b : mv.concave[i]) positions.push_back(f.position_of(b));
      for (const auto& b : mv.convex[i]) positions.push_back(f.position_of(b));
      std::sort(positions.begin(), positions.end());
      std::vector<Monomial> poles = pr.poles;
      std::sort(poles.begin(), poles.end());
      if (positions != poles) {
        nlohmann::json jp = nlohmann::json::array(), jq = nlohmann::json::array();
        for (const auto& m : positions) jp.push_back(m.str());
        for (const auto& m : poles) jq.push_back(m.str());
        fail(3, s, {{"component", i}, {"positions", jp}, {"poles", jq}});
      }

      // A4: regularity of the split part opposite to the pole-carrying side
      for (const auto& list : {mv.concave[i], mv.convex[i]})
        for (const auto& b : list) {
          Split sp = lweight_split(f, s, b);
          Monomial p = f.position_of(b);
          const FactoredRatZ& part =
              b.negative() ? sp.before.component(i) : sp.after.component(i);
          if (!part.regular_at(p))
            fail(4, s, {{"component", i}, {"box", b.str()},
                        {"part", b.negative() ? "before" : "after"}});
        }
    }

    // A5: local change of concave/convex sets under one concave addition
    auto has_coord = [](const std::vector<Box>& v, const Coord& c) {
      for (const auto& b : v)
        if (b.coord == c) return true;
      return false;
    };
    for (int i = 0; i < 2; ++i)
      for (const auto& b : mv.concave[i]) {
        State t = with_box_added(s, b);
        Moves mvt;
        try {
          mvt = concave_convex(f, t);
        } catch (const Error&) {
          continue;
        }
        const Coord& c = b.coord;
        std::vector<Coord> cc_allowed = {
            {c.x, c.y, c.z.offset(1)}, {c.x, c.y.offset(1), c.z}, {c.x.offset(1), c.y, c.z}};
        std::vector<Coord> cv_allowed = {
            c, {c.x, c.y, c.z.offset(-1)}, {c.x, c.y.offset(-1), c.z},
            {c.x.offset(-1), c.y, c.z}};
        for (int ci = 0; ci < 2; ++ci) {
          for (const auto& nb : mvt.concave[ci]) {
            if (has_coord(mv.concave[ci], nb.coord) || nb.coord == c) continue;
            if (std::find(cc_allowed.begin(), cc_allowed.end(), nb.coord) == cc_allowed.end())
              fail(5, s, {{"added", b.str()}, {"new_concave", nb.str()}});
          }
          for (const auto& ob : mv.convex[ci]) {
            if (has_coord(mvt.convex[ci], ob.coord)) continue;
            if (std::find(cv_allowed.begin(), cv_allowed.end(), ob.coord) == cv_allowed.end())
              fail(5, s, {{"added", b.str()}, {"lost_convex", ob.str()}});
          }
        }
      }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// relation checker

namespace {

struct StateData {
  State state;
  LWeightPair lw;
  TransitionSet f_act[2], e_act[2];
};

class Cache {
 public:
  Cache(const Family& fam, const std::optional<MutationSpec>& mut) : fam_(fam), mut_(mut) {}

  const StateData& get(const State& s) {
    auto it = data_.find(s.key());
    if (it != data_.end()) return it->second;
    StateData d;
    d.state = s;
    d.lw = lweight(fam_, s);
    for (int c = 0; c < 2; ++c) {
      d.f_act[c] = act_F(fam_, s, c);
      d.e_act[c] = act_E(fam_, s, c);
    }
    if (mut_ && mut_->state_key == s.key()) {
      auto& set = mut_->on_f ? d.f_act[mut_->color & 1] : d.e_act[mut_->color & 1];
      for (auto& t : set.items)
        if (t.support == mut_->support) t.coeff = t.coeff.negated();
    }
    return data_.emplace(s.key(), std::move(d)).first->second;
  }

 private:
  const Family& fam_;
  std::optional<MutationSpec> mut_;
  std::map<std::string, StateData> data_;
};

struct GroupKey {
  std::string target;
  std::vector<Monomial> supports;
  bool operator<(const GroupKey& o) const {
    if (target != o.target) return target < o.target;
    return supports < o.supports;
  }
};

std::string supports_str(const std::vector<Monomial>& v) {
  std::string s;
  for (const auto& m : v) s += (s.empty() ? "" : ", ") + m.str();
  return s;
}

class Checker {
 public:
  Checker(const Family& fam, const RelationOptions& opt) : fam_(fam), opt_(opt), cache_(fam, opt.mutation) {}

  RelationReport& report() { return rep_; }

  void fail(const std::string& relation, const State& s, nlohmann::json detail) {
    if (rep_.failures.size() < 256)
      rep_.failures.push_back({relation, fam_.state_str(s), std::move(detail)});
    else
      rep_.failures.push_back({relation, s.key(), nlohmann::json::object()});
  }

  void count(const std::string& relation, int64_t n = 1) { rep_.checked[relation] += n; }

  // K currents commute as diagonal operators; recorded structurally.
  void check_kk(const State& s) { count("kk"); }

  // (-1)^{i+j} g ratios: phi_target / phi_source must equal the affine-root
  // component built from the same g factors.
  void check_k_ef(const State& s) {
    const StateData& d = cache_.get(s);
    for (int j = 0; j < 2; ++j) {
      for (const auto& t : d.f_act[j].items) {
        LWeightPair target = cache_.get(t.target).lw;
        LWeightPair expect = affine_root(j, t.support).inverse();
        for (int i = 0; i < 2; ++i) {
          count(i == j ? "k-f-same" : "k-f-cross");
          if (!(target.component(i) == d.lw.component(i) * expect.component(i)))
            fail("k-f", s, {{"colors", {i, j}}, {"supports", {t.support.str()}},
                            {"lhs", target.component(i).str()},
                            {"rhs", (d.lw.component(i) * expect.component(i)).str()}});
        }
      }
      for (const auto& t : d.e_act[j].items) {
        LWeightPair target = cache_.get(t.target).lw;
        LWeightPair expect = affine_root(j, t.support);
        for (int i = 0; i < 2; ++i) {
          count(i == j ? "k-e-same" : "k-e-cross");
          if (!(target.component(i) == d.lw.component(i) * expect.component(i)))
            fail("k-e", s, {{"colors", {i, j}}, {"supports", {t.support.str()}},
                            {"lhs", target.component(i).str()},
                            {"rhs", (d.lw.component(i) * expect.component(i)).str()}});
        }
      }
    }
  }

  // (-1)^{i+j} g_{j,i}(w,z) F_i(z) F_j(w) + g_{i,j}(z,w) F_j(w) F_i(z) = 0
  // and the E analogue; matrix coefficients grouped by (target, z,w supports).
  void check_ff_ee(const State& s) {
    const StateData& d = cache_.get(s);
    for (int i = 0; i < 2; ++i)
      for (int j = i; j < 2; ++j) {
        int sign_ij = ((i + j) % 2 == 0) ? 1 : -1;
        for (bool is_f : {true, false}) {
          std::map<GroupKey, std::vector<FactoredValue>> groups;
          auto first_acts = is_f ? d.f_act[j].items : d.e_act[j].items;
          for (const auto& t1 : first_acts) {
            const StateData& mid = cache_.get(t1.target);
            const auto& second = is_f ? mid.f_act[i].items : mid.e_act[i].items;
            for (const auto& t2 : second) {
              // path: color-j step at support w=t1, then color-i step at z=t2
              FactoredValue g = is_f ? g_eval_factored(j, i, t1.support, t2.support)
                                     : g_eval_factored(i, j, t2.support, t1.support);
              FactoredValue v = t1.coeff * t2.coeff * g;
              if (sign_ij < 0) v = v.negated();
              groups[{t2.target.key(), {t2.support, t1.support}}].push_back(v);
            }
          }
          auto second_acts = is_f ? d.f_act[i].items : d.e_act[i].items;
          for (const auto& t1 : second_acts) {
            const StateData& mid = cache_.get(t1.target);
            const auto& second = is_f ? mid.f_act[j].items : mid.e_act[j].items;
            for (const auto& t2 : second) {
              // path: color-i step at support z=t1, then color-j step at w=t2
              FactoredValue g = is_f ? g_eval_factored(i, j, t1.support, t2.support)
                                     : g_eval_factored(j, i, t2.support, t1.support);
              groups[{t2.target.key(), {t1.support, t2.support}}].push_back(t1.coeff * t2.coeff *
                                                                            g);
            }
          }
          const char* name = is_f ? "ff-quadratic" : "ee-quadratic";
          for (const auto& [key, terms] : groups) {
            count(name);
            if (!group_sum_is_zero(terms))
              fail(name, s,
                   {{"colors", {i, j}}, {"supports", supports_str(key.supports)},
                    {"lhs", group_sum(terms).str()}, {"rhs", "0"}});
          }
        }
      }
  }

  // quadratic coefficient-ratio identities for ordered concave pairs
  void check_ratio_identities(const State& s) {
    const StateData& d = cache_.get(s);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (const auto& t1 : d.f_act[j].items) {
          const StateData& mid = cache_.get(t1.target);
          for (const auto& t2 : mid.f_act[i].items) {
            // does t2's box exist as a concave move of s itself?
            const Transition* base = nullptr;
            for (const auto& t : d.f_act[i].items)
              if (t.box == t2.box) base = &t;
            if (!base) {
              // forbidden configuration: the position ratio must be one of
              // q1^{+-1}, q3^{+-1} (cross color) or q2^{+-1} (same color)
              count("ff-forbidden");
              Monomial r = t2.support / t1.support;
              std::vector<Monomial> allowed;
              if (i == j)
                allowed = {Monomial::q2(), Monomial::q2(-1)};
              else
                allowed = {Monomial::q1(), Monomial::q1(-1), Monomial::q3(), Monomial::q3(-1)};
              if (std::find(allowed.begin(), allowed.end(), r) == allowed.end())
                fail("ff-forbidden", s,
                     {{"colors", {i, j}}, {"supports", supports_str({t2.support, t1.support})},
                      {"lhs", r.str()}, {"rhs", "q1/q3 (cross) or q2 (same) power"}});
              continue;
            }
            count("ff-ratio");
            int cmp = box_order(fam_, t2.box, t1.box);
            FactoredValue expect =
                cmp < 0 ? base->coeff *
                              affine_root(j, t1.support).inverse().component(i).eval_factored(
                                  t2.support)
                        : base->coeff;
            if (!t2.coeff.equals(expect))
              fail("ff-ratio", s,
                   {{"colors", {i, j}}, {"supports", supports_str({t2.support, t1.support})},
                    {"lhs", t2.coeff.str()}, {"rhs", expect.str()}});
          }
        }
  }

  // [E_i(z), F_j(w)] = delta_{ij}/(q-q^{-1}) delta(z/w) (K^+(w) - K^-(z))
  void check_ef(const State& s) {
    const StateData& d = cache_.get(s);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        std::map<GroupKey, std::vector<FactoredValue>> groups;
        for (const auto& t1 : d.f_act[j].items) {
          const StateData& mid = cache_.get(t1.target);
          for (const auto& t2 : mid.e_act[i].items)
            groups[{t2.target.key(), {t2.support, t1.support}}].push_back(t1.coeff * t2.coeff);
        }
        for (const auto& t1 : d.e_act[i].items) {
          const StateData& mid = cache_.get(t1.target);
          for (const auto& t2 : mid.f_act[j].items)
            groups[{t2.target.key(), {t1.support, t2.support}}].push_back(
                (t1.coeff * t2.coeff).negated());
        }
        if (i != j) {
          for (const auto& [key, terms] : groups) {
            count("ef-cross");
            if (!group_sum_is_zero(terms))
              fail("ef-cross", s,
                   {{"colors", {i, j}}, {"supports", supports_str(key.supports)},
                    {"lhs", group_sum(terms).str()}, {"rhs", "0"}});
          }
          continue;
        }
        // same color: off-diagonal groups cancel; diagonal groups match the
        // residue expansion of phi^i at each pole, and poles are covered
        std::set<std::string> poles_hit;
        for (const auto& [key, terms] : groups) {
          bool diagonal = key.target == s.key() && key.supports[0] == key.supports[1];
          if (!diagonal) {
            count("ef-offdiagonal");
            if (!group_sum_is_zero(terms))
              fail("ef-offdiagonal", s,
                   {{"colors", {i, j}}, {"supports", supports_str(key.supports)},
                    {"lhs", group_sum(terms).str()}, {"rhs", "0"}});
            continue;
          }
          count("ef-diagonal");
          const Monomial& p = key.supports[0];
          poles_hit.insert(p.str());
          try {
            FactoredValue rhs =
                d.lw.component(i).residue_factored(p) / FactoredValue::q_minus_qinv();
            std::vector<FactoredValue> all = terms;
            all.push_back(rhs.negated());
            if (!group_sum_is_zero(all))
              fail("ef-diagonal", s,
                   {{"colors", {i, j}}, {"supports", supports_str(key.supports)},
                    {"lhs", group_sum(terms).str()}, {"rhs", rhs.str()}});
          } catch (const Error& e) {
            fail("ef-diagonal", s, {{"colors", {i, j}}, {"error", e.what()}});
          }
        }
        count("ef-pole-coverage");
        for (const auto& p : d.lw.component(i).properties().poles)
          if (!poles_hit.count(p.str()))
            fail("ef-pole-coverage", s,
                 {{"colors", {i, j}}, {"supports", p.str()},
                  {"lhs", "no transition"}, {"rhs", "pole of the l-weight"}});
      }
  }

  // Sym_{z1,z2,z3} [X_i(z1),[X_i(z2),[X_i(z3), X_{i+1}(w)]_{q2}]]_{q2^{-1}} = 0
  void check_serre(const State& s) {
    struct Word {
      int q2pow;  // scalar q2^{q2pow}
      int sign;
      int slots[4];  // 0,1,2 are the color-i slots a,b,c; 3 is w; applied right-to-left
    };
    // expansion of [Fa,[Fb,[Fc,W]_{q2}]]_{q2^{-1}}; words listed left-to-right
    static const Word kWords[8] = {
        {0, +1, {0, 1, 2, 3}},  {1, -1, {0, 1, 3, 2}}, {0, -1, {0, 2, 3, 1}},
        {1, +1, {0, 3, 2, 1}},  {-1, -1, {1, 2, 3, 0}}, {0, +1, {1, 3, 2, 0}},
        {-1, +1, {2, 3, 1, 0}}, {0, -1, {3, 2, 1, 0}},
    };
    for (int i = 0; i < 2; ++i)
      for (bool is_f : {true, false}) {
        int jcol = 1 - i;
        // paths per word: (value, supports per slot, target)
        struct Path {
          FactoredValue value;
          Monomial slot_support[4];
          std::string target;
        };
        std::map<GroupKey, std::vector<FactoredValue>> groups;
        for (const auto& w : kWords) {
          Path start;
          start.value = FactoredValue::from_monomial(Monomial::q2(w.q2pow), w.sign);
          start.target = s.key();
          // walk right-to-left
          struct Frame {
            Path path;
            State st;
            int step;
          };
          std::vector<Frame> stack = {{start, s, 3}};
          while (!stack.empty()) {
            Frame fr = std::move(stack.back());
            stack.pop_back();
            if (fr.step < 0) {
              // symmetrization over z1,z2,z3: each permutation of the three
              // color-i slots pairs the path with a delta-support assignment
              int perm[3] = {0, 1, 2};
              do {
                GroupKey key;
                key.target = fr.st.key();
                key.supports = {fr.path.slot_support[perm[0]], fr.path.slot_support[perm[1]],
                                fr.path.slot_support[perm[2]], fr.path.slot_support[3]};
                groups[key].push_back(fr.path.value);
              } while (std::next_permutation(perm, perm + 3));
              continue;
            }
            int slot = w.slots[fr.step];
            int color = slot == 3 ? jcol : i;
            const StateData& d = cache_.get(fr.st);
            const auto& acts = is_f ? d.f_act[color].items : d.e_act[color].items;
            for (const auto& t : acts) {
              Frame nf;
              nf.path = fr.path;
              nf.path.value = nf.path.value * t.coeff;
              nf.path.slot_support[slot] = t.support;
              nf.st = t.target;
              nf.step = fr.step - 1;
              stack.push_back(std::move(nf));
            }
          }
        }
        const char* name = is_f ? "serre-f" : "serre-e";
        for (const auto& [key, terms] : groups) {
          count(name);
          if (!group_sum_is_zero(terms))
            fail(name, s,
                 {{"colors", {i, jcol}}, {"supports", supports_str(key.supports)},
                  {"lhs", group_sum(terms).str()}, {"rhs", "0"}});
        }
      }
  }

  void run_state(const State& s) {
    auto guarded = [&](const char* name, auto&& fn) {
      try {
        fn();
      } catch (const Error& e) {
        fail(name, s, {{"error", e.what()}});
      }
    };
    guarded("kk", [&] { check_kk(s); });
    guarded("k-ef", [&] { check_k_ef(s); });
    guarded("ff-quadratic", [&] { check_ff_ee(s); });
    guarded("ff-ratio", [&] { check_ratio_identities(s); });
    guarded("ef", [&] { check_ef(s); });
    if (opt_.check_serre) guarded("serre", [&] { check_serre(s); });
  }

 private:
  const Family& fam_;
  RelationOptions opt_;
  Cache cache_;
  RelationReport rep_;
};

}  // namespace

RelationReport check_relations(const Family& f, const std::vector<State>& states,
                               const RelationOptions& opt) {
  bool has_ref = false;
  for (const auto& s : states) {
    if (!f.is_valid(s)) throw Error(ErrorKind::InvalidState, "invalid state in set: " + s.key());
    if (s == f.reference()) has_ref = true;
  }
  if (!has_ref)
    throw Error(ErrorKind::ConfigError, "state set must contain the reference state");

  int jobs = std::max(1, opt.jobs);
  if (jobs == 1 || states.size() < 2) {
    Checker ch(f, opt);
    for (const auto& s : states) ch.run_state(s);
    return std::move(ch.report());
  }

  std::vector<RelationReport> parts((size_t)jobs);
  std::vector<std::thread> threads;
  for (int t = 0; t < jobs; ++t)
    threads.emplace_back([&, t] {
      Checker ch(f, opt);
      for (size_t idx = t; idx < states.size(); idx += size_t(jobs)) ch.run_state(states[idx]);
      parts[t] = std::move(ch.report());
    });
  for (auto& th : threads) th.join();
  RelationReport rep;
  for (auto& p : parts) {
    for (const auto& [k, v] : p.checked) rep.checked[k] += v;
    for (auto& w : p.failures) rep.failures.push_back(std::move(w));
  }
  std::sort(rep.failures.begin(), rep.failures.end(),
            [](const Witness& a, const Witness& b) {
              return std::tie(a.state, a.relation) < std::tie(b.state, b.relation);
            });
  return rep;
}

std::vector<MutationSpec> enumerate_mutations(const Family& f, const std::vector<State>& states) {
  std::vector<MutationSpec> out;
  for (const auto& s : states)
    for (int c = 0; c < 2; ++c) {
      for (const auto& t : act_F(f, s, c).items)
        out.push_back({true, c, s.key(), t.support});
      for (const auto& t : act_E(f, s, c).items)
        out.push_back({false, c, s.key(), t.support});
    }
  return out;
}

}  // namespace qtgl2
