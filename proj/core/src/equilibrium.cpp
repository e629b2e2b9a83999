#include "divjump/equilibrium.hpp"

namespace divjump {

EquilibriumCheck check_equilibrium(const GameInstance& game, const Assignment& assignment) {
  ClassState state = class_state_of(game, assignment);
  std::vector<NodeId> empties;
  for (NodeId v = 0; v < game.topology().node_count(); ++v) {
    if (state[v] == 0) empties.push_back(v);
  }
  for (int i = 0; i < game.agent_count(); ++i) {
    const Agent& agent = game.agents()[i];
    if (agent.kind != AgentKind::Strategic) continue;
    NodeId from = assignment.node_of_index(i);
    Rational current = node_utility(game, state, from, agent.type);
    if (current == Rational(1)) continue;
    for (NodeId target : empties) {
      Rational at_target = node_utility(game, state, target, agent.type, /*skip=*/from);
      if (at_target > current) {
        return {false, DeviationWitness{agent.id, target, current, at_target}};
      }
    }
  }
  return {true, std::nullopt};
}

bool class_state_is_equilibrium(const GameInstance& game, const ClassState& state) {
  const auto& stubborn_at = game.stubborn_agent_index_by_node();
  int node_count = game.topology().node_count();
  std::vector<NodeId> empties;
  for (NodeId v = 0; v < node_count; ++v) {
    if (state[v] == 0) empties.push_back(v);
  }
  for (NodeId from = 0; from < node_count; ++from) {
    if (state[from] == 0 || stubborn_at[from] >= 0) continue;
    TypeId type = state[from];
    Rational current = node_utility(game, state, from, type);
    if (current == Rational(1)) continue;
    for (NodeId target : empties) {
      if (node_utility(game, state, target, type, /*skip=*/from) > current) return false;
    }
  }
  return true;
}

}  // namespace divjump
