#pragma once
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qtgl2/box.hpp"
#include "qtgl2/rational_z.hpp"

namespace qtgl2 {

struct WindowBounds {
  int64_t d0min = 0, d0max = 0, d1min = 0, d1max = 0;
  bool contains(int64_t d0, int64_t d1) const {
    return d0 >= d0min && d0 <= d0max && d1 >= d1min && d1 <= d1max;
  }
};

/// A module family: box universe, reference state, validity predicate,
/// initial l-weight and the declared cross-group ordering. Immutable.
class Family {
 public:
  virtual ~Family() = default;

  virtual std::string name() const = 0;
  virtual nlohmann::json params_json() const;
  virtual State reference() const { return State{}; }
  virtual bool is_valid(const State& s) const = 0;
  /// finite superset of all boxes that might be concave or convex for s
  virtual std::vector<Box> move_candidates(const State& s) const = 0;
  /// rank per group tag; higher rank = larger boxes
  virtual std::vector<int> group_ranks() const { return {0}; }

  /// all states of the family whose bidegree could fall in the window,
  /// complete per cell (direct combinatorial generation)
  virtual std::vector<State> window_states(const WindowBounds& w) const;

  /// exact per-cell state counts over the window; default counts
  /// window_states, overridden where binned counting is much cheaper
  virtual std::map<std::pair<int64_t, int64_t>, int64_t> window_counts(
      const WindowBounds& w) const;

  virtual State parse_state(const std::string& text) const;
  virtual std::string state_str(const State& s) const;

  /// initial l-weight with the spectral shift and substitution applied
  LWeightPair psi() const { return raw_psi().scaled(shift_).specialized(subst_); }
  /// box position with the spectral shift and substitution applied
  Monomial position_of(const Box& b) const { return subst_.apply(position(b) * shift_); }
  const Monomial& shift() const { return shift_; }
  const Substitution& subst() const { return subst_; }

  std::shared_ptr<Family> with_shift(const Monomial& a) const;
  std::shared_ptr<Family> with_substitution(const Substitution& s) const;

 protected:
  virtual LWeightPair raw_psi() const = 0;
  virtual std::shared_ptr<Family> clone() const = 0;
  Monomial shift_;
  Substitution subst_;
};

using FamilySpec = std::shared_ptr<const Family>;

FamilySpec make_vector(int color);
FamilySpec make_fock(int color);
FamilySpec make_macmahon(int color);  // kappa stays formal
/// Macmahon with the given white box prohibited and kappa specialized so that
/// kappa^2 = p(prohibited)^{-1}. Throws InvalidProhibitedBox.
FamilySpec make_restricted_macmahon(int color, const Coord& prohibited, const Monomial& kappa);
/// G_0: restricted Macmahon at (0,0,2) with kappa = q3.
FamilySpec make_g0();
/// Fock realized as restricted Macmahon at (0,1,0) with kappa = q.
FamilySpec make_fock_as_restricted();
FamilySpec make_eval_verma(int color = 0);
FamilySpec make_relaxed_verma();
FamilySpec make_slanted(int m);  // throws InvalidSlope for m < 1
/// escape hatch for negative tests: fixed universe, every sub-collection valid
FamilySpec make_custom(std::string name, LWeightPair psi, std::vector<Box> universe);
/// two stacked rows with no support rule below the upper one; violates (A2)
FamilySpec make_broken_layers();

FamilySpec shift_twist(const FamilySpec& f, const Monomial& a);
FamilySpec specialize_family(const FamilySpec& f, const Substitution& s);

FamilySpec family_by_name(const std::string& name, int color, int m);

/// strict box order within family f (negative < reference < positive,
/// then group rank, then lexicographic (y,z,x)); -1 / 0 / +1
int box_order(const Family& f, const Box& a, const Box& b);

struct Moves {
  std::vector<Box> concave[2];  // per color
  std::vector<Box> convex[2];
  std::vector<Box> all_concave() const;
  std::vector<Box> all_convex() const;
};
/// Throws InvalidState when !f.is_valid(s).
Moves concave_convex(const Family& f, const State& s);

/// BFS closure from the reference by <= bound add/remove moves,
/// deduplicated, sorted by (total degree, deg0, canonical key).
std::vector<State> enumerate_states(const Family& f, int bound);

/// product of component values at infinity, the scalar by which K_0 K_1 acts
FactoredValue family_level(const Family& f);

}  // namespace qtgl2
