#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "divjump/rational.hpp"
#include "divjump/topology.hpp"

namespace divjump {

using AgentId = int;
using TypeId = int;  // types are 1..k

enum class AgentKind { Strategic, Stubborn };

struct Agent {
  AgentId id;
  TypeId type;
  AgentKind kind;
};

// A diversity-seeking jump game: topology, k agent types, strategic/stubborn
// designation and the fixed placement of the stubborn agents. Immutable after
// construction.
class GameInstance {
 public:
  GameInstance(Topology topology, int num_types, std::vector<Agent> agents,
               std::map<AgentId, NodeId> stubborn_placement);

  const Topology& topology() const { return topology_; }
  int num_types() const { return num_types_; }
  int agent_count() const { return static_cast<int>(agents_.size()); }

  // Agents sorted ascending by id.
  const std::vector<Agent>& agents() const { return agents_; }
  const Agent& agent(AgentId id) const { return agents_[agent_index(id)]; }
  int agent_index(AgentId id) const;
  bool has_agent(AgentId id) const;

  const std::map<AgentId, NodeId>& stubborn_placement() const { return stubborn_placement_; }
  bool all_strategic() const { return stubborn_placement_.empty(); }
  int strategic_count() const { return strategic_count_; }

  // Indexed 1..k; index 0 unused.
  const std::vector<int>& strategic_count_by_type() const { return strategic_by_type_; }

  // -1 when the node hosts no stubborn agent.
  const std::vector<int>& stubborn_agent_index_by_node() const { return stubborn_at_node_; }

  int empty_node_count() const { return topology_.node_count() - agent_count(); }

 private:
  Topology topology_;
  int num_types_;
  std::vector<Agent> agents_;
  std::map<AgentId, NodeId> stubborn_placement_;
  std::vector<int> strategic_by_type_;
  std::vector<int> stubborn_at_node_;
  int strategic_count_ = 0;
};

// Injective map of all agents to nodes, respecting the stubborn placement.
// Stored by agent index in the owning game's agent order.
class Assignment {
 public:
  Assignment(const GameInstance& game, const std::map<AgentId, NodeId>& placement);

  // Internal constructor from nodes-by-agent-index (validated).
  Assignment(const GameInstance& game, std::vector<NodeId> node_by_index);

  const std::vector<NodeId>& nodes() const { return node_by_index_; }
  NodeId node_of_index(int agent_index) const { return node_by_index_[agent_index]; }
  NodeId node_of(const GameInstance& game, AgentId id) const {
    return node_by_index_[game.agent_index(id)];
  }
  std::map<AgentId, NodeId> as_map(const GameInstance& game) const;

  friend bool operator==(const Assignment& a, const Assignment& b) {
    return a.node_by_index_ == b.node_by_index_;
  }

 private:
  void validate(const GameInstance& game) const;
  std::vector<NodeId> node_by_index_;
};

// Node-level view of an assignment: 0 = empty, otherwise the occupant's type.
// Within a fixed game the stubborn nodes never change, so this vector is the
// canonical occupant-class state used for symmetry reduction, cycle detection
// and brute-force enumeration.
using ClassState = std::vector<std::uint8_t>;

ClassState class_state_of(const GameInstance& game, const Assignment& assignment);

// Occupant agent index per node, -1 for empty.
std::vector<int> occupant_index_by_node(const GameInstance& game, const Assignment& assignment);

// Materializes the canonical assignment of a class state: stubborn agents at
// their fixed nodes, strategic agents of each type in ascending id order on
// that type's nodes in ascending node order.
Assignment assignment_from_class_state(const GameInstance& game, const ClassState& state);

// Utility a strategic or stubborn agent of type `type` would have at `node`
// under `state`, with `skip` (if valid) treated as empty. This is the
// diversity-seeking utility: occupied different-type neighbors over occupied
// neighbors, 0 when no neighbor is occupied.
Rational node_utility(const GameInstance& game, const ClassState& state, NodeId node,
                      TypeId type, NodeId skip = -1);

// Occupied-neighbor counts per type (types absent from the neighborhood are
// omitted from the map).
std::map<TypeId, int> neighbor_type_counts(const GameInstance& game,
                                           const Assignment& assignment, NodeId node);

Rational utility(const GameInstance& game, const Assignment& assignment, AgentId agent);
Rational similarity_utility(const GameInstance& game, const Assignment& assignment,
                            AgentId agent);

// Sum of the strategic agents' utilities.
Rational social_welfare(const GameInstance& game, const Assignment& assignment);
Rational social_welfare(const GameInstance& game, const ClassState& state);

}  // namespace divjump
