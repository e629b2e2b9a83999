#pragma once

#include <vector>

#include "divjump/game.hpp"

namespace divjump {

// Independent-set reduction gadget. Two components joined by one bridge edge:
// G1 carries the input graph H completely joined to a hub set W of 7s+1
// stubborn agents (5s+1 blue, 2s red); G2 offers three free nodes x, y, z
// whose stubborn neighborhoods yield utilities 1, 5/6 and 4/7 when x, y, z
// are otherwise empty. The strategic agents are s+1 reds.
struct Gadget {
  GameInstance game;
  std::vector<NodeId> h_nodes;  // one per vertex of H, in input order
  std::vector<NodeId> w_nodes;
  NodeId x;
  NodeId y;
  NodeId z;
  std::vector<AgentId> strategic_agents;  // the s+1 strategic reds, ascending

  static constexpr TypeId kRed = 1;
  static constexpr TypeId kBlue = 2;
};

Gadget build_gadget(int h_vertex_count, const std::vector<Edge>& h_edges, int s);

// The canonical yes-instance assignment: the first s strategic reds on the
// given independent set of H, the last one at x. Throws if the vertex set is
// not independent in H or has the wrong size.
Assignment gadget_independent_set_assignment(const Gadget& gadget,
                                             const std::vector<int>& h_vertices);

}  // namespace divjump
