// Command-line front end: families, l-weights, actions, verification and
// characters, with JSON output for CI.
//
// Exit codes: 0 pass, 1 verification failure, 2 config error, 3 invalid state.
#include <CLI11.hpp>

#include <iostream>

#include "qtgl2/characters.hpp"
#include "qtgl2/serre.hpp"
#include "qtgl2/verify.hpp"

using namespace qtgl2;

namespace {

struct CommonOpts {
  std::string family = "fock";
  int color = 0;
  int m = 1;
  std::string prohibited;  // "i,j,k" for restricted-macmahon
  std::string kappa;
  std::string shift;
  std::string specialize;
  bool json = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--family", o.family,
                  "vector|fock|macmahon|restricted-macmahon|g0|fock-restricted|verma|relaxed|"
                  "slanted|broken-layers");
  cmd->add_option("--color", o.color, "color of the family variant (0 or 1)");
  cmd->add_option("--m", o.m, "slope for the slanted family");
  cmd->add_option("--prohibited", o.prohibited, "prohibited box i,j,k (restricted-macmahon)");
  cmd->add_option("--kappa", o.kappa, "kappa monomial, e.g. q3 (restricted-macmahon)");
  cmd->add_option("--shift", o.shift, "spectral shift monomial, e.g. q1");
  cmd->add_option("--specialize", o.specialize, "substitutions, e.g. d=q^-2;kappa=q3");
  cmd->add_flag("--json", o.json, "machine-readable output");
}

FamilySpec build_family(const CommonOpts& o) {
  FamilySpec f;
  if (o.family == "restricted-macmahon") {
    if (o.prohibited.empty() || o.kappa.empty())
      throw Error(ErrorKind::ConfigError, "restricted-macmahon needs --prohibited and --kappa");
    auto parts = Monomial::parse("1");  // placeholder to keep parse errors uniform
    (void)parts;
    std::vector<int64_t> c;
    {
      std::stringstream ss(o.prohibited);
      std::string item;
      while (std::getline(ss, item, ',')) c.push_back(std::stoll(item));
    }
    if (c.size() != 3) throw Error(ErrorKind::ConfigError, "--prohibited needs i,j,k");
    Coord coord{{c[0], 0, 0}, {c[1], 0, 0}, {c[2], 0, 0}};
    f = make_restricted_macmahon(o.color, coord, Monomial::parse(o.kappa));
  } else {
    f = family_by_name(o.family, o.color, o.m);
  }
  if (!o.shift.empty()) f = shift_twist(f, Monomial::parse(o.shift));
  if (!o.specialize.empty()) f = specialize_family(f, Substitution::parse(o.specialize));
  return f;
}

WindowBounds parse_window(const std::string& text) {
  // "d0min:d0max,d1min:d1max"
  auto fail = [&] { throw Error(ErrorKind::ConfigError, "window format: a:b,c:d"); };
  auto comma = text.find(',');
  if (comma == std::string::npos) fail();
  auto parse_range = [&](const std::string& r) {
    auto colon = r.find(':');
    if (colon == std::string::npos) fail();
    return std::pair<int64_t, int64_t>{std::stoll(r.substr(0, colon)),
                                       std::stoll(r.substr(colon + 1))};
  };
  auto [a, b] = parse_range(text.substr(0, comma));
  auto [c, d] = parse_range(text.substr(comma + 1));
  return {a, b, c, d};
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::InvalidState:
      return 3;
    case ErrorKind::ConfigError:
    case ErrorKind::UnknownKind:
    case ErrorKind::InvalidSlope:
    case ErrorKind::InvalidProhibitedBox:
    case ErrorKind::WindowTooLargeForBound:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for combinatorial quantum toroidal gl2 modules"};
  app.require_subcommand(1);

  CommonOpts o;
  int bound = 3;
  std::string state_text;
  std::string window_text;
  int diag = -1;
  int color_arg = 0;
  std::string op = "F";
  std::string kind_name;
  uint64_t seed = 1;
  int serre_trials = 25;
  int jobs = 1;
  bool no_serre = false;
  int mutate_index = -1;

  auto* cmd_states = app.add_subcommand("states", "enumerate states by move closure");
  add_common(cmd_states, o);
  cmd_states->add_option("--bound", bound, "maximum number of moves from the reference");

  auto* cmd_lweight = app.add_subcommand("lweight", "l-weight of a state");
  add_common(cmd_lweight, o);
  cmd_lweight->add_option("--state", state_text, "state in the family's text format")->required();

  auto* cmd_act = app.add_subcommand("act", "E/F transitions out of a state");
  add_common(cmd_act, o);
  cmd_act->add_option("--state", state_text)->required();
  cmd_act->add_option("--op", op, "E or F");
  cmd_act->add_option("--current-color", color_arg, "color of the acting current");

  auto* cmd_verify = app.add_subcommand("verify", "assumptions + defining relations + identities");
  add_common(cmd_verify, o);
  cmd_verify->add_option("--bound", bound);
  cmd_verify->add_option("--seed", seed, "seed for the identity substitutions");
  cmd_verify->add_option("--serre-trials", serre_trials);
  cmd_verify->add_option("--jobs", jobs, "parallelism degree");
  cmd_verify->add_flag("--no-serre", no_serre, "skip the cubic relation suite");
  cmd_verify->add_option("--mutate-coefficient", mutate_index,
                         "flip the sign of the k-th action coefficient (smoke test)");

  auto* cmd_char = app.add_subcommand("character", "bigraded character vs the closed form");
  add_common(cmd_char, o);
  cmd_char->add_option("--window", window_text, "d0min:d0max,d1min:d1max");
  cmd_char->add_option("--diag", diag, "compare on the diagonal up to this degree");

  auto* cmd_compare = app.add_subcommand("compare", "character vs a named closed form");
  add_common(cmd_compare, o);
  cmd_compare->add_option("--kind", kind_name, "closed form name")->required();
  cmd_compare->add_option("--window", window_text);
  cmd_compare->add_option("--diag", diag);

  CLI11_PARSE(app, argc, argv);

  try {
    FamilySpec fam = build_family(o);

    if (cmd_states->parsed()) {
      auto states = enumerate_states(*fam, bound);
      for (const auto& s : states) {
        auto [d0, d1] = state_degree(s);
        if (o.json) {
          nlohmann::json j = s.to_json();
          j["deg0"] = d0;
          j["deg1"] = d1;
          j["text"] = fam->state_str(s);
          std::cout << j.dump() << "\n";
        } else {
          std::cout << fam->state_str(s) << "  deg=(" << d0 << "," << d1 << ")\n";
        }
      }
      return 0;
    }

    if (cmd_lweight->parsed()) {
      State s = fam->parse_state(state_text);
      LWeightPair lw = act_K(*fam, s);
      if (o.json)
        std::cout << lw.to_json().dump(2) << "\n";
      else
        std::cout << lw.str() << "\n";
      return 0;
    }

    if (cmd_act->parsed()) {
      State s = fam->parse_state(state_text);
      if (!fam->is_valid(s)) throw Error(ErrorKind::InvalidState, "invalid state");
      TransitionSet ts =
          op == "E" ? act_E(*fam, s, color_arg) : act_F(*fam, s, color_arg);
      nlohmann::json out = nlohmann::json::array();
      for (const auto& t : ts.items) {
        if (o.json)
          out.push_back({{"box", t.box.to_json()},
                         {"target", fam->state_str(t.target)},
                         {"support", t.support.to_json()},
                         {"coeff", t.coeff.to_field().to_json()}});
        else
          std::cout << op << "_" << color_arg << ": " << fam->state_str(s) << " -> "
                    << fam->state_str(t.target) << "   delta(z/" << t.support.str()
                    << ")   coeff = " << t.coeff.str() << "\n";
      }
      if (o.json) std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (cmd_verify->parsed()) {
      auto states = enumerate_states(*fam, bound);
      RelationOptions ropt;
      ropt.check_serre = !no_serre;
      ropt.jobs = jobs;
      if (mutate_index >= 0) {
        auto muts = enumerate_mutations(*fam, states);
        if (muts.empty() || mutate_index >= int(muts.size()))
          throw Error(ErrorKind::ConfigError, "mutation index out of range");
        ropt.mutation = muts[size_t(mutate_index)];
      }
      AssumptionReport arep = check_assumptions(*fam, states);
      RelationReport rrep = check_relations(*fam, states, ropt);
      bool serre_ok = true;
      if (!no_serre) serre_ok = verify_serre_identity(serre_trials, seed);
      bool pass = arep.all_pass() && rrep.all_pass() && serre_ok;
      nlohmann::json out = {{"family", fam->name()},
                            {"params", fam->params_json()},
                            {"states", states.size()},
                            {"assumptions", arep.to_json()},
                            {"relations", rrep.to_json()},
                            {"serre_identity", serre_ok},
                            {"pass", pass}};
      if (o.json) {
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "family " << fam->name() << ": " << states.size() << " states\n";
        std::cout << "assumptions (A1-A5): " << (arep.all_pass() ? "pass" : "FAIL") << "\n";
        for (const auto& [k, v] : rrep.checked)
          std::cout << "  " << k << ": " << v << " checks\n";
        std::cout << "relations: " << (rrep.all_pass() ? "pass" : "FAIL") << "\n";
        if (!no_serre)
          std::cout << "serre identity: " << (serre_ok ? "pass" : "FAIL") << "\n";
        for (const auto& wt : arep.witnesses) std::cout << "  " << wt.to_json().dump() << "\n";
        for (const auto& wt : rrep.failures) std::cout << "  " << wt.to_json().dump() << "\n";
        std::cout << (pass ? "PASS" : "FAIL") << "\n";
      }
      return pass ? 0 : 1;
    }

    if (cmd_char->parsed() || cmd_compare->parsed()) {
      ClosedForm cf = cmd_compare->parsed() ? closed_form_by_name(kind_name, o.m, o.color)
                                            : closed_form_for(*fam);
      CharCompare rep;
      nlohmann::json table;
      if (diag >= 0) {
        rep = compare_diag(*fam, cf, diag);
        table = rep.cells;
      } else {
        if (window_text.empty())
          throw Error(ErrorKind::ConfigError, "need --window or --diag");
        WindowBounds w = parse_window(window_text);
        CharWindow cw = character(*fam, w);
        rep = compare_character(*fam, cf, w);
        table = cw.to_json();
      }
      if (o.json) {
        nlohmann::json out = {{"family", fam->name()},
                              {"table", table},
                              {"comparison", rep.to_json()}};
        std::cout << out.dump(2) << "\n";
      } else {
        for (const auto& cell : rep.cells) std::cout << cell.dump() << "\n";
        std::cout << (rep.pass ? "PASS" : "FAIL") << "\n";
      }
      return rep.pass ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error (" << error_kind_name(e.kind()) << "): " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
