#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "divjump/dynamics.hpp"
#include "divjump/generators.hpp"
#include "divjump/oracle.hpp"

namespace divjump {

// Game files: {nodes, edges: [[u,v],...], k, agents: [{id,type,kind,node?}]}
// where node is present iff kind == "stubborn". Rationals serialize as "p/q".
nlohmann::json game_to_json(const GameInstance& game);
GameInstance game_from_json(const nlohmann::json& j);
GameInstance read_game_file(const std::string& path);
void write_game_file(const std::string& path, const GameInstance& game);

// Assignment files: {placement: {"agent-id": node-id}}.
nlohmann::json assignment_to_json(const GameInstance& game, const Assignment& assignment);
Assignment assignment_from_json(const GameInstance& game, const nlohmann::json& j);
Assignment read_assignment_file(const GameInstance& game, const std::string& path);
void write_assignment_file(const std::string& path, const GameInstance& game,
                           const Assignment& assignment);

nlohmann::json report_to_json(const GameInstance& game, const OracleReport& report);

InstanceSpec instance_spec_from_json(const nlohmann::json& j);
InstanceSpec read_instance_spec_file(const std::string& path);

// JSON-lines trace: one record per move, then one terminal record
// {status, steps, social_welfare}.
class TraceWriter {
 public:
  TraceWriter(std::ostream& out, const GameInstance& game, PotentialConfig config);

  void write_move(int step, const Move& move, const Rational& phi_before,
                  const Rational& phi_after);
  void write_terminal(RunStatus status, int steps, const Rational& welfare);

  // Convenience: stream a full outcome (recomputes the potentials).
  void write_outcome(const Assignment& start, const RunOutcome& outcome);

 private:
  std::ostream& out_;
  const GameInstance& game_;
  PotentialConfig config_;
};

std::string run_status_name(RunStatus status);

}  // namespace divjump
