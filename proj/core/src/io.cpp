#include "divjump/io.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>

namespace divjump {

namespace {

nlohmann::json rational_json(const Rational& r) { return r.str(); }

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

}  // namespace

nlohmann::json game_to_json(const GameInstance& game) {
  nlohmann::json j;
  j["nodes"] = game.topology().node_count();
  j["edges"] = nlohmann::json::array();
  for (const auto& [u, v] : game.topology().edges()) j["edges"].push_back({u, v});
  j["k"] = game.num_types();
  j["agents"] = nlohmann::json::array();
  for (const Agent& a : game.agents()) {
    nlohmann::json agent;
    agent["id"] = a.id;
    agent["type"] = a.type;
    agent["kind"] = a.kind == AgentKind::Stubborn ? "stubborn" : "strategic";
    if (a.kind == AgentKind::Stubborn) agent["node"] = game.stubborn_placement().at(a.id);
    j["agents"].push_back(agent);
  }
  return j;
}

GameInstance game_from_json(const nlohmann::json& j) {
  int nodes = j.at("nodes").get<int>();
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  }
  int k = j.at("k").get<int>();
  std::vector<Agent> agents;
  std::map<AgentId, NodeId> placement;
  for (const auto& a : j.at("agents")) {
    Agent agent;
    agent.id = a.at("id").get<int>();
    agent.type = a.at("type").get<int>();
    std::string kind = a.at("kind").get<std::string>();
    if (kind == "stubborn") {
      agent.kind = AgentKind::Stubborn;
      placement[agent.id] = a.at("node").get<int>();
    } else if (kind == "strategic") {
      agent.kind = AgentKind::Strategic;
      if (a.contains("node")) {
        throw std::invalid_argument("game file: strategic agent must not carry a node");
      }
    } else {
      throw std::invalid_argument("game file: unknown agent kind '" + kind + "'");
    }
    agents.push_back(agent);
  }
  return GameInstance(Topology(nodes, std::move(edges)), k, std::move(agents),
                      std::move(placement));
}

GameInstance read_game_file(const std::string& path) { return game_from_json(load_json(path)); }

void write_game_file(const std::string& path, const GameInstance& game) {
  open_out(path) << game_to_json(game).dump(2) << "\n";
}

nlohmann::json assignment_to_json(const GameInstance& game, const Assignment& assignment) {
  nlohmann::json placement = nlohmann::json::object();
  for (const auto& [id, node] : assignment.as_map(game)) {
    placement[std::to_string(id)] = node;
  }
  return nlohmann::json{{"placement", placement}};
}

Assignment assignment_from_json(const GameInstance& game, const nlohmann::json& j) {
  std::map<AgentId, NodeId> placement;
  for (const auto& [key, value] : j.at("placement").items()) {
    placement[std::stoi(key)] = value.get<int>();
  }
  return Assignment(game, placement);
}

Assignment read_assignment_file(const GameInstance& game, const std::string& path) {
  return assignment_from_json(game, load_json(path));
}

void write_assignment_file(const std::string& path, const GameInstance& game,
                           const Assignment& assignment) {
  open_out(path) << assignment_to_json(game, assignment).dump(2) << "\n";
}

nlohmann::json report_to_json(const GameInstance& game, const OracleReport& report) {
  nlohmann::json j;
  j["total_states_examined"] = report.total_states_examined;
  j["equilibrium_count"] = report.equilibrium_count;
  j["opt_welfare"] = rational_json(report.opt_welfare);
  j["min_eq_welfare"] =
      report.min_eq_welfare ? rational_json(*report.min_eq_welfare) : nlohmann::json(nullptr);
  j["max_eq_welfare"] =
      report.max_eq_welfare ? rational_json(*report.max_eq_welfare) : nlohmann::json(nullptr);
  if (report.poa_infinite) {
    j["poa"] = "infinite";
  } else {
    j["poa"] = report.poa ? rational_json(*report.poa) : nlohmann::json(nullptr);
  }
  j["pos"] = report.pos ? rational_json(*report.pos) : nlohmann::json(nullptr);
  j["example_equilibrium"] = report.example_equilibrium
                                 ? assignment_to_json(game, *report.example_equilibrium)
                                 : nlohmann::json(nullptr);
  j["example_optimum"] = report.example_optimum
                             ? assignment_to_json(game, *report.example_optimum)
                             : nlohmann::json(nullptr);
  return j;
}

InstanceSpec instance_spec_from_json(const nlohmann::json& j) {
  InstanceSpec spec;
  spec.family = j.at("family").get<std::string>();
  if (j.contains("parameters")) {
    const auto& p = j.at("parameters");
    if (p.contains("ints")) spec.int_params = p.at("ints").get<std::vector<int>>();
    if (p.contains("seed")) spec.seed = p.at("seed").get<std::uint64_t>();
    if (p.contains("path")) {
      spec.custom_path = p.at("path").get<std::string>();
      spec.fixture_path = spec.custom_path;
    }
  }
  if (j.contains("type_profile")) {
    for (const auto& t : j.at("type_profile")) {
      spec.type_profile.push_back(TypeCount{t.at("type").get<int>(),
                                            t.value("strategic", 0), t.value("stubborn", 0)});
    }
  }
  return spec;
}

InstanceSpec read_instance_spec_file(const std::string& path) {
  return instance_spec_from_json(load_json(path));
}

std::string run_status_name(RunStatus status) {
  switch (status) {
    case RunStatus::Converged: return "converged";
    case RunStatus::CycleDetected: return "cycle_detected";
    case RunStatus::StepLimit: return "step_limit";
  }
  return "unknown";
}

TraceWriter::TraceWriter(std::ostream& out, const GameInstance& game, PotentialConfig config)
    : out_(out), game_(game), config_(config) {
  config_.validate();
}

void TraceWriter::write_move(int step, const Move& move, const Rational& phi_before,
                             const Rational& phi_after) {
  nlohmann::json j;
  j["step"] = step;
  j["agent"] = move.agent;
  j["type"] = game_.agent(move.agent).type;
  j["from"] = move.from;
  j["to"] = move.to;
  j["u_before"] = rational_json(move.utility_before);
  j["u_after"] = rational_json(move.utility_after);
  j["phi_before"] = rational_json(phi_before);
  j["phi_after"] = rational_json(phi_after);
  out_ << j.dump() << "\n";
}

void TraceWriter::write_terminal(RunStatus status, int steps, const Rational& welfare) {
  nlohmann::json j;
  j["status"] = run_status_name(status);
  j["steps"] = steps;
  j["social_welfare"] = rational_json(welfare);
  out_ << j.dump() << "\n";
}

void TraceWriter::write_outcome(const Assignment& start, const RunOutcome& outcome) {
  Assignment current = start;
  Rational phi = potential(game_, current, config_);
  int step = 0;
  for (const Move& move : outcome.trace) {
    current = apply_move(game_, current, move);
    Rational next_phi = potential(game_, current, config_);
    write_move(step++, move, phi, next_phi);
    phi = next_phi;
  }
  write_terminal(outcome.status, outcome.steps, social_welfare(game_, current));
}

}  // namespace divjump
