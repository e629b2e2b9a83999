#pragma once

#include <map>
#include <string>
#include <vector>

#include "divjump/game.hpp"

namespace divjump::testing {

constexpr TypeId R = 1;
constexpr TypeId B = 2;

// All-strategic game with one agent per listed type, ids 0..n-1.
inline GameInstance make_game(Topology topology, const std::vector<TypeId>& agent_types,
                              int k = 2) {
  std::vector<Agent> agents;
  for (std::size_t i = 0; i < agent_types.size(); ++i) {
    agents.push_back({static_cast<AgentId>(i), agent_types[i], AgentKind::Strategic});
  }
  return GameInstance(std::move(topology), k, std::move(agents), {});
}

// Agents 0..n-1 placed at the listed nodes.
inline Assignment place(const GameInstance& game, const std::vector<NodeId>& nodes) {
  std::map<AgentId, NodeId> placement;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    placement[static_cast<AgentId>(i)] = nodes[i];
  }
  return Assignment(game, placement);
}

// Line game from a pattern string over {'r', 'b', 'y', '.'} ('.' = empty),
// one node per character; agents numbered left to right.
inline std::pair<GameInstance, Assignment> line_from(const std::string& pattern, int k = 2) {
  int nodes = static_cast<int>(pattern.size());
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < nodes; ++v) edges.push_back({v, v + 1});
  std::vector<Agent> agents;
  std::map<AgentId, NodeId> placement;
  AgentId id = 0;
  for (int v = 0; v < nodes; ++v) {
    TypeId type = 0;
    if (pattern[v] == 'r') type = 1;
    if (pattern[v] == 'b') type = 2;
    if (pattern[v] == 'y') type = 3;
    if (type == 0) continue;
    agents.push_back({id, type, AgentKind::Strategic});
    placement[id] = v;
    ++id;
  }
  GameInstance game(Topology(nodes, std::move(edges)), k, std::move(agents), {});
  Assignment assignment(game, placement);
  return {std::move(game), std::move(assignment)};
}

}  // namespace divjump::testing
