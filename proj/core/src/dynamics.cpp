#include "divjump/dynamics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace divjump {

namespace {

void collect_moves(const GameInstance& game, const ClassState& state,
                   const std::vector<NodeId>& empty_nodes, int agent_index, NodeId from,
                   std::vector<Move>& out) {
  const Agent& agent = game.agents()[agent_index];
  Rational before = node_utility(game, state, from, agent.type);
  if (before == Rational(1)) return;  // already at the maximum
  for (NodeId target : empty_nodes) {
    Rational after = node_utility(game, state, target, agent.type, /*skip=*/from);
    if (after > before) {
      out.push_back(Move{agent.id, from, target, before, after});
    }
  }
}

std::vector<NodeId> empty_nodes_of(const GameInstance& game, const ClassState& state) {
  std::vector<NodeId> empties;
  for (NodeId v = 0; v < game.topology().node_count(); ++v) {
    if (state[v] == 0) empties.push_back(v);
  }
  return empties;
}

}  // namespace

std::vector<Move> improving_moves(const GameInstance& game, const Assignment& assignment) {
  ClassState state = class_state_of(game, assignment);
  std::vector<NodeId> empties = empty_nodes_of(game, state);
  std::vector<Move> out;
  for (int i = 0; i < game.agent_count(); ++i) {
    if (game.agents()[i].kind != AgentKind::Strategic) continue;
    collect_moves(game, state, empties, i, assignment.node_of_index(i), out);
  }
  return out;  // agents are id-sorted and targets ascending, so the order is lexicographic
}

std::vector<Move> improving_moves(const GameInstance& game, const Assignment& assignment,
                                  AgentId agent) {
  int idx = game.agent_index(agent);
  if (game.agents()[idx].kind != AgentKind::Strategic) {
    throw std::invalid_argument("improving_moves: agent " + std::to_string(agent) +
                                " is stubborn");
  }
  ClassState state = class_state_of(game, assignment);
  std::vector<NodeId> empties = empty_nodes_of(game, state);
  std::vector<Move> out;
  collect_moves(game, state, empties, idx, assignment.node_of_index(idx), out);
  return out;
}

Assignment apply_move(const GameInstance& game, const Assignment& assignment, const Move& move) {
  int idx = game.agent_index(move.agent);
  if (assignment.node_of_index(idx) != move.from) {
    throw std::invalid_argument("apply_move: agent is not at the move's source node");
  }
  for (NodeId node : assignment.nodes()) {
    if (node == move.to) throw std::invalid_argument("apply_move: target node is occupied");
  }
  std::vector<NodeId> nodes = assignment.nodes();
  nodes[idx] = move.to;
  return Assignment(game, std::move(nodes));
}

void PotentialConfig::validate() const {
  if (m <= Rational(0) || m >= Rational(1)) {
    throw std::invalid_argument("PotentialConfig: m must lie strictly between 0 and 1");
  }
}

Rational potential(const GameInstance& game, const ClassState& state,
                   const PotentialConfig& config) {
  config.validate();
  Rational total(0);
  for (const auto& [u, v] : game.topology().edges()) {
    if (state[u] == 0 || state[v] == 0) {
      total += config.m;  // one or both endpoints empty
    } else if (state[u] == state[v]) {
      total += Rational(1);
    }
  }
  return total;
}

Rational potential(const GameInstance& game, const Assignment& assignment,
                   const PotentialConfig& config) {
  return potential(game, class_state_of(game, assignment), config);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  // Rejection sampling; mt19937_64 output is identical everywhere, unlike
  // std::uniform_int_distribution.
  if (n == 0) throw std::invalid_argument("uniform_below: empty range");
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % n;
}

RunOutcome run_ird(const GameInstance& game, const Assignment& start,
                   const IrdOptions& options) {
  if (options.max_steps <= 0) throw std::invalid_argument("run_ird: max_steps must be positive");
  options.potential_config.validate();

  Assignment current = start;
  std::mt19937_64 rng(options.seed);

  struct StateKey {
    ClassState state;
    bool operator==(const StateKey&) const = default;
  };
  struct StateHash {
    std::size_t operator()(const StateKey& k) const {
      std::size_t h = 1469598103934665603ull;
      for (std::uint8_t b : k.state) {
        h ^= b;
        h *= 1099511628211ull;
      }
      return h;
    }
  };
  std::unordered_map<StateKey, int, StateHash> seen_at_step;
  if (options.detect_cycles) {
    seen_at_step.emplace(StateKey{class_state_of(game, current)}, 0);
  }

  RunOutcome outcome{RunStatus::Converged, current, {}, std::nullopt, std::nullopt, 0};
  std::vector<Assignment> history;
  if (options.detect_cycles) history.push_back(current);

  for (int step = 0; step < options.max_steps; ++step) {
    std::vector<Move> moves = improving_moves(game, current);
    if (moves.empty()) {
      outcome.status = RunStatus::Converged;
      outcome.final_assignment = current;
      outcome.steps = step;
      return outcome;
    }
    const Move* chosen = &moves.front();
    switch (options.policy) {
      case MovePolicy::First:
        break;
      case MovePolicy::BestResponse:
        for (const Move& m : moves) {
          if (m.utility_after > chosen->utility_after) chosen = &m;
        }
        break;
      case MovePolicy::Random:
        chosen = &moves[uniform_below(rng, moves.size())];
        break;
    }
    current = apply_move(game, current, *chosen);
    outcome.trace.push_back(*chosen);

    if (options.detect_cycles) {
      auto [it, inserted] = seen_at_step.emplace(StateKey{class_state_of(game, current)},
                                                 static_cast<int>(outcome.trace.size()));
      if (!inserted) {
        int first = it->second;
        outcome.status = RunStatus::CycleDetected;
        outcome.final_assignment = current;
        outcome.steps = static_cast<int>(outcome.trace.size());
        outcome.cycle = std::vector<Move>(outcome.trace.begin() + first, outcome.trace.end());
        outcome.cycle_start = history[first];
        return outcome;
      }
      history.push_back(current);
    }
  }
  outcome.status = RunStatus::StepLimit;
  outcome.final_assignment = current;
  outcome.steps = static_cast<int>(outcome.trace.size());
  return outcome;
}

}  // namespace divjump
