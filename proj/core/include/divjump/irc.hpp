#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "divjump/dynamics.hpp"

namespace divjump {

enum class IrcStatus {
  CycleFound,
  // Every occupant-class state was explored and no directed cycle exists in
  // the improving-move graph.
  NoCycleExhaustive,
  // The budget ran out first; absence of a cycle is inconclusive.
  BudgetExceeded,
};

struct IrcResult {
  IrcStatus status;
  // Verified cycle: replaying `cycle` from `cycle_start` returns to the same
  // occupant-class state with every move improving.
  std::vector<Move> cycle;
  std::optional<Assignment> cycle_start;
  std::int64_t states_visited = 0;

  bool found() const { return status == IrcStatus::CycleFound; }
};

// Depth-first search for a directed cycle in the improving-move graph over
// occupant-class states. `state_budget` bounds the number of distinct class
// states that may be discovered.
IrcResult find_irc(const GameInstance& game, std::int64_t state_budget);

// Tree on hubs x-y plus z (bridged through one of its leaves): x carries one
// blue leaf, y carries y_red red and y_blue blue leaves, z carries z_red red
// and z_blue blue leaves. Two red agents roam; the leaf agents are strategic
// or stubborn per the flag. Exactly one node stays empty.
struct LeafBundleTree {
  GameInstance game;
  NodeId x;
  NodeId y;
  NodeId z;
  AgentId rover_a;  // the two red agents that start on the hubs
  AgentId rover_b;
};
LeafBundleTree make_leaf_bundle_tree(int y_red, int y_blue, int z_red, int z_blue,
                                     bool stubborn_leaves);

struct IrcWitness {
  GameInstance game;
  IrcResult result;
};

// Deterministic searches that feed find_irc with instance families until a
// verified cycle appears. Tree family: leaf-bundle trees over a small
// parameter grid, then seeded random trees; all strategic, one empty node,
// two types. Regular family: all connected 4-regular graphs on 8..11 nodes
// with exactly 4 empty nodes, over the two-type splits.
std::optional<IrcWitness> search_tree_irc_witness(std::int64_t per_instance_budget);
std::optional<IrcWitness> search_regular_irc_witness(std::int64_t per_instance_budget);

}  // namespace divjump
