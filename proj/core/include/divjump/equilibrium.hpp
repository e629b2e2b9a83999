#pragma once

#include <optional>

#include "divjump/game.hpp"

namespace divjump {

// Certificate that an assignment is not an equilibrium: an improving jump.
struct DeviationWitness {
  AgentId agent;
  NodeId target;
  Rational utility_current;
  Rational utility_at_target;
};

struct EquilibriumCheck {
  bool is_equilibrium;
  // Lexicographically first (agent id, target node) witness when not an
  // equilibrium.
  std::optional<DeviationWitness> witness;

  explicit operator bool() const { return is_equilibrium; }
};

EquilibriumCheck check_equilibrium(const GameInstance& game, const Assignment& assignment);

// Class-level check used by the exhaustive oracles; early-exits on the first
// improving jump.
bool class_state_is_equilibrium(const GameInstance& game, const ClassState& state);

}  // namespace divjump
