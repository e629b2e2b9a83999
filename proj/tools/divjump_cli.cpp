// Command-line front end for diversity-seeking jump games: instance
// generation, improving-response dynamics with JSON-lines traces, equilibrium
// checks, the constructive tree solver, the brute-force PoA/PoS oracle,
// improving-response-cycle search and the desk-scale PoA/PoS battery.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "divjump/dynamics.hpp"
#include "divjump/equilibrium.hpp"
#include "divjump/gadget.hpp"
#include "divjump/generators.hpp"
#include "divjump/io.hpp"
#include "divjump/irc.hpp"
#include "divjump/oracle.hpp"
#include "divjump/spider.hpp"
#include "divjump/tree_solver.hpp"

namespace {

using namespace divjump;

// Exit codes (also listed in the README):
//   0 success / converged / equilibrium / cycle found / all rows pass
//   2 usage error        3 input error
//   4 ird: cycle detected            5 ird: step limit
//   6 budget exceeded                7 check-eq: not an equilibrium
//   8 find-irc: no cycle, exhausted  9 poa-suite: failing rows
//   10 not a tree   11 stubborn agents present
//   12 too many agents for the tree  13 tree solver verification failure
enum ExitCode {
  kOk = 0,
  kUsage = 2,
  kInput = 3,
  kCycleDetected = 4,
  kStepLimit = 5,
  kBudgetExceeded = 6,
  kNotEquilibrium = 7,
  kNoCycleExhaustive = 8,
  kSuiteFailed = 9,
  kNotATree = 10,
  kStubbornPresent = 11,
  kTooManyAgents = 12,
  kSolverVerification = 13,
};

struct CommonOptions {
  std::string instance_path;
  std::string spec_path;
  std::string start_path;
  std::string out_path;
  std::string policy = "first";
  std::string m_text = "1/4";
  std::uint64_t seed = 0;
  bool random_start = false;
  int max_steps = 100000;
  std::int64_t budget = 1000000;
};

GameInstance load_instance(const CommonOptions& opt) {
  if (!opt.instance_path.empty()) return read_game_file(opt.instance_path);
  if (!opt.spec_path.empty()) return build_instance(read_instance_spec_file(opt.spec_path));
  throw CLI::ValidationError("--instance or --spec is required");
}

Assignment random_start_assignment(const GameInstance& game, std::uint64_t seed) {
  std::vector<NodeId> free_nodes;
  const auto& stubborn_at = game.stubborn_agent_index_by_node();
  for (NodeId v = 0; v < game.topology().node_count(); ++v) {
    if (stubborn_at[v] < 0) free_nodes.push_back(v);
  }
  std::mt19937_64 rng(seed);
  for (std::size_t i = free_nodes.size(); i > 1; --i) {
    std::swap(free_nodes[i - 1], free_nodes[uniform_below(rng, i)]);
  }
  std::map<AgentId, NodeId> placement = game.stubborn_placement();
  std::size_t next = 0;
  for (const Agent& a : game.agents()) {
    if (a.kind == AgentKind::Strategic) placement[a.id] = free_nodes[next++];
  }
  return Assignment(game, placement);
}

MovePolicy parse_policy(const std::string& name) {
  if (name == "first") return MovePolicy::First;
  if (name == "best") return MovePolicy::BestResponse;
  if (name == "random") return MovePolicy::Random;
  throw CLI::ValidationError("--policy must be first|best|random");
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open for writing: " + path);
  return file;
}

int cmd_gen(const CommonOptions& opt) {
  GameInstance game = build_instance(read_instance_spec_file(opt.spec_path));
  if (opt.out_path.empty()) {
    std::cout << game_to_json(game).dump(2) << "\n";
  } else {
    write_game_file(opt.out_path, game);
  }
  return kOk;
}

int cmd_ird(const CommonOptions& opt, bool no_detect_cycles) {
  GameInstance game = load_instance(opt);
  Assignment start = opt.start_path.empty()
                         ? random_start_assignment(game, opt.seed)
                         : read_assignment_file(game, opt.start_path);
  if (opt.start_path.empty() && !opt.random_start) {
    throw CLI::ValidationError("ird needs --start or --random-start");
  }
  IrdOptions options;
  options.policy = parse_policy(opt.policy);
  options.seed = opt.seed;
  options.max_steps = opt.max_steps;
  options.detect_cycles = !no_detect_cycles;
  options.potential_config.m = Rational::parse(opt.m_text);
  RunOutcome outcome = run_ird(game, start, options);

  std::ofstream file;
  std::ostream& out = open_output(file, opt.out_path);
  TraceWriter writer(out, game, options.potential_config);
  writer.write_outcome(start, outcome);

  std::cerr << "ird: " << run_status_name(outcome.status) << " after " << outcome.steps
            << " step(s)\n";
  switch (outcome.status) {
    case RunStatus::Converged: return kOk;
    case RunStatus::CycleDetected: return kCycleDetected;
    case RunStatus::StepLimit: return kStepLimit;
  }
  return kOk;
}

int cmd_check_eq(const CommonOptions& opt) {
  GameInstance game = load_instance(opt);
  Assignment assignment = read_assignment_file(game, opt.start_path);
  EquilibriumCheck check = check_equilibrium(game, assignment);
  nlohmann::json j;
  j["is_equilibrium"] = check.is_equilibrium;
  j["social_welfare"] = social_welfare(game, assignment).str();
  if (check.witness) {
    j["witness"] = {{"agent", check.witness->agent},
                    {"target", check.witness->target},
                    {"utility_current", check.witness->utility_current.str()},
                    {"utility_at_target", check.witness->utility_at_target.str()}};
  }
  std::ofstream file;
  open_output(file, opt.out_path) << j.dump(2) << "\n";
  return check.is_equilibrium ? kOk : kNotEquilibrium;
}

int cmd_solve_tree(const CommonOptions& opt) {
  GameInstance game = load_instance(opt);
  Assignment result = construct_tree_equilibrium(game);
  if (!opt.out_path.empty()) write_assignment_file(opt.out_path, game, result);
  EquilibriumCheck check = check_equilibrium(game, result);
  std::cout << "welfare " << social_welfare(game, result).str() << "\n";
  std::cout << "equilibrium " << (check.is_equilibrium ? "verified" : "FAILED") << "\n";
  if (opt.out_path.empty()) std::cout << assignment_to_json(game, result).dump(2) << "\n";
  return check.is_equilibrium ? kOk : kSolverVerification;
}

int cmd_brute(const CommonOptions& opt) {
  GameInstance game = load_instance(opt);
  OracleReport report = brute_force(game, opt.budget);
  std::ofstream file;
  open_output(file, opt.out_path) << report_to_json(game, report).dump(2) << "\n";
  return kOk;
}

int cmd_find_irc(const CommonOptions& opt) {
  GameInstance game = load_instance(opt);
  IrcResult result = find_irc(game, opt.budget);
  nlohmann::json j;
  j["states_visited"] = result.states_visited;
  switch (result.status) {
    case IrcStatus::CycleFound: {
      j["status"] = "cycle_found";
      j["cycle_start"] = assignment_to_json(game, *result.cycle_start);
      j["cycle"] = nlohmann::json::array();
      for (const Move& m : result.cycle) {
        j["cycle"].push_back({{"agent", m.agent},
                              {"from", m.from},
                              {"to", m.to},
                              {"u_before", m.utility_before.str()},
                              {"u_after", m.utility_after.str()}});
      }
      break;
    }
    case IrcStatus::NoCycleExhaustive:
      j["status"] = "no_cycle_exhaustive";
      break;
    case IrcStatus::BudgetExceeded:
      j["status"] = "budget_exceeded";
      break;
  }
  std::ofstream file;
  open_output(file, opt.out_path) << j.dump(2) << "\n";
  switch (result.status) {
    case IrcStatus::CycleFound: return kOk;
    case IrcStatus::NoCycleExhaustive: return kNoCycleExhaustive;
    case IrcStatus::BudgetExceeded: return kBudgetExceeded;
  }
  return kOk;
}

struct SuiteRow {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass;
};

SuiteRow row_star(const std::string&) {
  GameInstance game = gen_star_asymmetric(5, 2);
  OracleReport r = brute_force(game, 10000);
  bool pass = r.poa && *r.poa == Rational(4) && r.opt_welfare == Rational(5);
  return {"star-n5-k2", "poa 4/1", r.poa ? "poa " + r.poa->str() : "poa undefined", pass};
}

SuiteRow row_line2(const std::string&) {
  auto [game, eq] = gen_poa_line_equilibrium(8);
  OracleReport r = brute_force(game, 10000);
  bool pass = r.poa && *r.poa == Rational(4, 3) && check_equilibrium(game, eq).is_equilibrium &&
              social_welfare(game, eq) == Rational(6);
  return {"line-n8-k2", "poa 4/3", r.poa ? "poa " + r.poa->str() : "poa undefined", pass};
}

SuiteRow row_linek(const std::string&) {
  auto [game, eq] = gen_poa_line_ktypes(6, 3);
  OracleReport r = brute_force(game, 10000);
  bool pass = r.poa && *r.poa == Rational(4, 3) && check_equilibrium(game, eq).is_equilibrium &&
              social_welfare(game, eq) == Rational(9, 2);
  return {"line-n6-k3", "poa 4/3", r.poa ? "poa " + r.poa->str() : "poa undefined", pass};
}

SuiteRow row_pos(const std::string& fixture) {
  GameInstance game = load_pos_fixture(fixture);
  OracleReport r = brute_force(game, 10000);
  bool pass = r.opt_welfare == Rational(65, 12) && r.max_eq_welfare &&
              *r.max_eq_welfare == Rational(62, 12) && r.pos && *r.pos == Rational(65, 62);
  if (pass) {
    EquilibriumCheck opt_check = check_equilibrium(game, *r.example_optimum);
    pass = !opt_check.is_equilibrium && opt_check.witness &&
           opt_check.witness->utility_at_target == Rational(3, 4);
  }
  std::string computed = "opt " + r.opt_welfare.str() +
                         " max_eq " + (r.max_eq_welfare ? r.max_eq_welfare->str() : "-") +
                         " pos " + (r.pos ? r.pos->str() : "-");
  return {"pos-fixture", "opt 65/12 max_eq 31/6 pos 65/62", computed, pass};
}

SuiteRow row_gadget_yes(const std::string&) {
  Gadget g = build_gadget(3, {{0, 1}, {1, 2}}, 2);
  Assignment a = gadget_independent_set_assignment(g, {0, 2});
  bool pass = check_equilibrium(g.game, a).is_equilibrium;
  return {"gadget-p3-yes", "equilibrium", pass ? "equilibrium" : "not an equilibrium", pass};
}

SuiteRow row_gadget_no(const std::string&) {
  Gadget g = build_gadget(3, {{0, 1}, {1, 2}, {0, 2}}, 2);
  OracleReport r = brute_force(g.game, 10000);
  bool pass = r.equilibrium_count == 0 && r.total_states_examined == 20;
  std::ostringstream computed;
  computed << r.equilibrium_count << " equilibria over " << r.total_states_examined << " states";
  return {"gadget-k3-no", "0 equilibria over 20 states", computed.str(), pass};
}

int cmd_poa_suite(const std::string& rows_csv, const std::string& fixture,
                  const std::string& out_path) {
  using RowFn = SuiteRow (*)(const std::string&);
  const std::vector<std::pair<std::string, RowFn>> all_rows = {
      {"star-n5-k2", row_star},       {"line-n8-k2", row_line2},
      {"line-n6-k3", row_linek},      {"pos-fixture", row_pos},
      {"gadget-p3-yes", row_gadget_yes}, {"gadget-k3-no", row_gadget_no},
  };
  std::vector<std::pair<std::string, RowFn>> selected;
  if (rows_csv == "all") {
    selected = all_rows;
  } else {
    std::stringstream ss(rows_csv);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (name.empty()) continue;
      auto it = std::find_if(all_rows.begin(), all_rows.end(),
                             [&](const auto& row) { return row.first == name; });
      if (it == all_rows.end()) throw CLI::ValidationError("unknown row '" + name + "'");
      selected.push_back(*it);
    }
    if (selected.empty()) throw CLI::ValidationError("--rows selected an empty battery");
  }

  nlohmann::json out = nlohmann::json::array();
  std::vector<std::string> failing;
  for (const auto& [name, fn] : selected) {
    SuiteRow row;
    try {
      row = fn(fixture);
    } catch (const std::exception& e) {
      row = {name, "", std::string("error: ") + e.what(), false};
    }
    std::cout << std::left << std::setw(16) << row.name << (row.pass ? "PASS  " : "FAIL  ")
              << row.computed << "\n";
    if (!row.pass) failing.push_back(row.name);
    out.push_back({{"row", row.name},
                   {"expected", row.expected},
                   {"computed", row.computed},
                   {"pass", row.pass}});
  }
  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) throw std::runtime_error("cannot open for writing: " + out_path);
    file << out.dump(2) << "\n";
  }
  if (!failing.empty()) {
    std::cerr << "failing rows:";
    for (const std::string& name : failing) std::cerr << " " << name;
    std::cerr << "\n";
    return kSuiteFailed;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"diversity-seeking jump games on graphs"};
  app.require_subcommand(1);

  CommonOptions opt;
  bool no_detect_cycles = false;
  std::string rows_csv = "all";
  std::string fixture = "data/pos_fixture.json";

  auto add_common = [&](CLI::App* cmd, bool with_spec = true) {
    cmd->add_option("--instance", opt.instance_path, "game file (JSON)");
    if (with_spec) cmd->add_option("--spec", opt.spec_path, "instance spec file (JSON)");
    cmd->add_option("--out", opt.out_path, "output path (default: stdout)");
  };

  CLI::App* gen = app.add_subcommand("gen", "generate an instance from a spec file");
  gen->add_option("--spec", opt.spec_path, "instance spec file (JSON)")->required();
  gen->add_option("--out", opt.out_path, "output game file");

  CLI::App* ird = app.add_subcommand("ird", "run improving-response dynamics");
  add_common(ird);
  ird->add_option("--start", opt.start_path, "start assignment file");
  ird->add_flag("--random-start", opt.random_start, "draw the start from --seed");
  ird->add_option("--policy", opt.policy, "first|best|random");
  ird->add_option("--seed", opt.seed, "seed for random policy / random start");
  ird->add_option("--max-steps", opt.max_steps, "step limit")->check(CLI::PositiveNumber);
  ird->add_option("--m", opt.m_text, "potential parameter as p/q");
  ird->add_flag("--no-detect-cycles", no_detect_cycles, "disable class-state cycle detection");

  CLI::App* check = app.add_subcommand("check-eq", "check an assignment for equilibrium");
  add_common(check);
  check->add_option("--start", opt.start_path, "assignment file")->required();

  CLI::App* solve = app.add_subcommand("solve-tree", "construct a tree equilibrium");
  add_common(solve);

  CLI::App* brute = app.add_subcommand("brute", "exhaustive equilibrium/PoA/PoS oracle");
  add_common(brute);
  brute->add_option("--budget", opt.budget, "class-state budget")->check(CLI::PositiveNumber);

  CLI::App* irc = app.add_subcommand("find-irc", "search for an improving-response cycle");
  add_common(irc);
  irc->add_option("--budget", opt.budget, "class-state budget")->check(CLI::PositiveNumber);

  CLI::App* suite = app.add_subcommand("poa-suite", "desk-scale PoA/PoS battery");
  suite->add_option("--rows", rows_csv, "comma-separated row names (default: all)");
  suite->add_option("--fixture", fixture, "pinned PoS fixture path");
  suite->add_option("--out", opt.out_path, "machine-readable summary path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen(opt);
    if (ird->parsed()) return cmd_ird(opt, no_detect_cycles);
    if (check->parsed()) return cmd_check_eq(opt);
    if (solve->parsed()) return cmd_solve_tree(opt);
    if (brute->parsed()) return cmd_brute(opt);
    if (irc->parsed()) return cmd_find_irc(opt);
    if (suite->parsed()) return cmd_poa_suite(rows_csv, fixture, opt.out_path);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const NotATreeError& e) {
    std::cerr << e.what() << "\n";
    return kNotATree;
  } catch (const StubbornPresentError& e) {
    std::cerr << e.what() << "\n";
    return kStubbornPresent;
  } catch (const TooManyAgentsError& e) {
    std::cerr << e.what() << "\n";
    return kTooManyAgents;
  } catch (const InternalVerificationError& e) {
    std::cerr << e.what() << "\n";
    return kSolverVerification;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kUsage;
}
