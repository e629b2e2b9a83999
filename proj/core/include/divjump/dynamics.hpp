#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "divjump/game.hpp"

namespace divjump {

// One improving jump of a strategic agent to a previously empty node.
struct Move {
  AgentId agent;
  NodeId from;
  NodeId to;
  Rational utility_before;
  Rational utility_after;

  friend bool operator==(const Move&, const Move&) = default;
};

// Every improving move currently available, ordered ascending by
// (agent id, target node). The target utility is computed in the post-move
// assignment, i.e. with the agent's origin vacated.
std::vector<Move> improving_moves(const GameInstance& game, const Assignment& assignment);
std::vector<Move> improving_moves(const GameInstance& game, const Assignment& assignment,
                                  AgentId agent);

Assignment apply_move(const GameInstance& game, const Assignment& assignment, const Move& move);

// Edge-weight parameter of the potential function. Spider-table audits
// additionally require m < 1/2; the default 1/4 satisfies every bound
// exercised here.
struct PotentialConfig {
  Rational m = Rational(1, 4);
  void validate() const;
};

// Sum over edges: 1 when both endpoints host the same type, m when at least
// one endpoint is empty, 0 when the endpoints host different types.
Rational potential(const GameInstance& game, const Assignment& assignment,
                   const PotentialConfig& config = {});
Rational potential(const GameInstance& game, const ClassState& state,
                   const PotentialConfig& config = {});

enum class MovePolicy { First, BestResponse, Random };

enum class RunStatus { Converged, CycleDetected, StepLimit };

struct IrdOptions {
  MovePolicy policy = MovePolicy::First;
  std::uint64_t seed = 0;         // used by MovePolicy::Random only
  int max_steps = 100000;
  bool detect_cycles = true;
  PotentialConfig potential_config = {};
};

struct RunOutcome {
  RunStatus status;
  Assignment final_assignment;
  std::vector<Move> trace;
  // The repeating segment when status == CycleDetected: replaying it from
  // cycle_start returns to the same occupant-class state.
  std::optional<std::vector<Move>> cycle;
  std::optional<Assignment> cycle_start;
  int steps = 0;
};

// Sequential improving-response dynamics. Runs until no improving move
// remains, a class state repeats (when detect_cycles is set), or max_steps
// moves have fired.
RunOutcome run_ird(const GameInstance& game, const Assignment& start, const IrdOptions& options);

// Deterministic uniform draw in [0, n), identical across platforms.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

}  // namespace divjump
