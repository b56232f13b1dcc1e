#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qtgl2/action.hpp"

namespace qtgl2 {

struct Witness {
  std::string relation;
  std::string state;
  nlohmann::json detail;
  nlohmann::json to_json() const;
};

struct AssumptionReport {
  bool pass[5] = {true, true, true, true, true};  // A1..A5
  std::vector<Witness> witnesses;
  bool all_pass() const {
    for (bool p : pass)
      if (!p) return false;
    return true;
  }
  nlohmann::json to_json() const;
};

/// (A1) distinct l-weights, (A2) balanced with simple poles, (A3) positions of
/// concave/convex boxes biject with poles per color, (A4) regularity of the
/// split parts at the box position, (A5) locality of concave/convex updates.
/// Failures are report entries with concrete witnesses, never exceptions.
AssumptionReport check_assumptions(const Family& f, const std::vector<State>& states);

/// flips the sign of one action coefficient; for sensitivity testing
struct MutationSpec {
  bool on_f = true;
  int color = 0;
  std::string state_key;
  Monomial support;
};

struct RelationOptions {
  bool check_serre = true;
  int jobs = 1;
  std::optional<MutationSpec> mutation;
};

struct RelationReport {
  std::map<std::string, int64_t> checked;  // relation name -> matrix-coefficient groups checked
  std::vector<Witness> failures;
  bool all_pass() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

/// Verifies every defining relation on each state of the set with exact
/// arithmetic, following transitions out of the set where two- and four-step
/// words require it: K-E/K-F ratio identities, quadratic E-E/F-F coefficient
/// identities, [E,F] off-diagonal cancellation and diagonal residue
/// identities with pole coverage, and the cubic (Serre) relations via the
/// full commutator word expansion. Requires reference in the set.
RelationReport check_relations(const Family& f, const std::vector<State>& states,
                               const RelationOptions& opt = {});

/// All coefficient mutation points of the truncation, in deterministic order.
std::vector<MutationSpec> enumerate_mutations(const Family& f, const std::vector<State>& states);

}  // namespace qtgl2
