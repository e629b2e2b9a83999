#include "divjump/game.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace divjump {

GameInstance::GameInstance(Topology topology, int num_types, std::vector<Agent> agents,
                           std::map<AgentId, NodeId> stubborn_placement)
    : topology_(std::move(topology)),
      num_types_(num_types),
      agents_(std::move(agents)),
      stubborn_placement_(std::move(stubborn_placement)) {
  if (num_types_ < 2) throw std::invalid_argument("GameInstance: k must be at least 2");
  if (agents_.size() < 2) throw std::invalid_argument("GameInstance: need at least 2 agents");
  if (static_cast<int>(agents_.size()) >= topology_.node_count()) {
    throw std::invalid_argument("GameInstance: |V| must exceed the number of agents");
  }
  std::sort(agents_.begin(), agents_.end(),
            [](const Agent& a, const Agent& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < agents_.size(); ++i) {
    if (agents_[i].id == agents_[i - 1].id) {
      throw std::invalid_argument("GameInstance: duplicate agent id");
    }
  }
  strategic_by_type_.assign(num_types_ + 1, 0);
  std::size_t stubborn_count = 0;
  for (const Agent& a : agents_) {
    if (a.type < 1 || a.type > num_types_) {
      throw std::invalid_argument("GameInstance: agent type out of range 1..k");
    }
    if (a.kind == AgentKind::Strategic) {
      ++strategic_count_;
      ++strategic_by_type_[a.type];
    } else {
      ++stubborn_count;
      if (!stubborn_placement_.count(a.id)) {
        throw std::invalid_argument("GameInstance: stubborn agent " + std::to_string(a.id) +
                                    " has no placement");
      }
    }
  }
  if (stubborn_placement_.size() != stubborn_count) {
    throw std::invalid_argument("GameInstance: stubborn placement must cover exactly the stubborn agents");
  }
  stubborn_at_node_.assign(topology_.node_count(), -1);
  for (const auto& [id, node] : stubborn_placement_) {
    if (!topology_.valid_node(node)) {
      throw std::invalid_argument("GameInstance: stubborn placement at invalid node");
    }
    int idx = agent_index(id);
    if (agents_[idx].kind != AgentKind::Stubborn) {
      throw std::invalid_argument("GameInstance: placement given for a strategic agent");
    }
    if (stubborn_at_node_[node] != -1) {
      throw std::invalid_argument("GameInstance: stubborn placement is not injective");
    }
    stubborn_at_node_[node] = idx;
  }
}

int GameInstance::agent_index(AgentId id) const {
  auto it = std::lower_bound(agents_.begin(), agents_.end(), id,
                             [](const Agent& a, AgentId v) { return a.id < v; });
  if (it == agents_.end() || it->id != id) {
    throw std::invalid_argument("GameInstance: unknown agent id " + std::to_string(id));
  }
  return static_cast<int>(it - agents_.begin());
}

bool GameInstance::has_agent(AgentId id) const {
  auto it = std::lower_bound(agents_.begin(), agents_.end(), id,
                             [](const Agent& a, AgentId v) { return a.id < v; });
  return it != agents_.end() && it->id == id;
}

Assignment::Assignment(const GameInstance& game, const std::map<AgentId, NodeId>& placement) {
  if (placement.size() != game.agents().size()) {
    throw std::invalid_argument("Assignment: placement must cover every agent exactly once");
  }
  node_by_index_.assign(game.agent_count(), -1);
  for (const auto& [id, node] : placement) {
    node_by_index_[game.agent_index(id)] = node;
  }
  validate(game);
}

Assignment::Assignment(const GameInstance& game, std::vector<NodeId> node_by_index)
    : node_by_index_(std::move(node_by_index)) {
  if (static_cast<int>(node_by_index_.size()) != game.agent_count()) {
    throw std::invalid_argument("Assignment: wrong number of agents");
  }
  validate(game);
}

void Assignment::validate(const GameInstance& game) const {
  std::set<NodeId> used;
  for (int i = 0; i < game.agent_count(); ++i) {
    NodeId node = node_by_index_[i];
    if (!game.topology().valid_node(node)) {
      throw std::invalid_argument("Assignment: invalid node id " + std::to_string(node));
    }
    if (!used.insert(node).second) {
      throw std::invalid_argument("Assignment: two agents share node " + std::to_string(node));
    }
  }
  for (const auto& [id, node] : game.stubborn_placement()) {
    if (node_by_index_[game.agent_index(id)] != node) {
      throw std::invalid_argument("Assignment: stubborn agent " + std::to_string(id) +
                                  " must sit at its fixed node");
    }
  }
}

std::map<AgentId, NodeId> Assignment::as_map(const GameInstance& game) const {
  std::map<AgentId, NodeId> out;
  for (int i = 0; i < game.agent_count(); ++i) out[game.agents()[i].id] = node_by_index_[i];
  return out;
}

ClassState class_state_of(const GameInstance& game, const Assignment& assignment) {
  ClassState state(game.topology().node_count(), 0);
  for (int i = 0; i < game.agent_count(); ++i) {
    state[assignment.node_of_index(i)] = static_cast<std::uint8_t>(game.agents()[i].type);
  }
  return state;
}

std::vector<int> occupant_index_by_node(const GameInstance& game, const Assignment& assignment) {
  std::vector<int> occupant(game.topology().node_count(), -1);
  for (int i = 0; i < game.agent_count(); ++i) occupant[assignment.node_of_index(i)] = i;
  return occupant;
}

Assignment assignment_from_class_state(const GameInstance& game, const ClassState& state) {
  if (static_cast<int>(state.size()) != game.topology().node_count()) {
    throw std::invalid_argument("class state has wrong node count");
  }
  std::vector<NodeId> node_by_index(game.agent_count(), -1);
  const auto& stubborn_at = game.stubborn_agent_index_by_node();
  // Strategic nodes per type, ascending node order.
  std::vector<std::vector<NodeId>> nodes_by_type(game.num_types() + 1);
  for (NodeId v = 0; v < game.topology().node_count(); ++v) {
    if (stubborn_at[v] >= 0) {
      if (state[v] != game.agents()[stubborn_at[v]].type) {
        throw std::invalid_argument("class state disagrees with the stubborn placement");
      }
      node_by_index[stubborn_at[v]] = v;
    } else if (state[v] != 0) {
      nodes_by_type[state[v]].push_back(v);
    }
  }
  std::vector<std::size_t> cursor(game.num_types() + 1, 0);
  for (int i = 0; i < game.agent_count(); ++i) {
    const Agent& a = game.agents()[i];
    if (a.kind != AgentKind::Strategic) continue;
    auto& pool = nodes_by_type[a.type];
    if (cursor[a.type] >= pool.size()) {
      throw std::invalid_argument("class state has too few nodes of type " +
                                  std::to_string(a.type));
    }
    node_by_index[i] = pool[cursor[a.type]++];
  }
  for (TypeId t = 1; t <= game.num_types(); ++t) {
    if (cursor[t] != nodes_by_type[t].size()) {
      throw std::invalid_argument("class state has too many nodes of type " + std::to_string(t));
    }
  }
  return Assignment(game, std::move(node_by_index));
}

Rational node_utility(const GameInstance& game, const ClassState& state, NodeId node,
                      TypeId type, NodeId skip) {
  int occupied = 0;
  int different = 0;
  for (NodeId w : game.topology().neighbors(node)) {
    if (w == skip) continue;
    std::uint8_t code = state[w];
    if (code == 0) continue;
    ++occupied;
    if (code != type) ++different;
  }
  if (occupied == 0) return Rational(0);
  return Rational(different, occupied);
}

std::map<TypeId, int> neighbor_type_counts(const GameInstance& game,
                                           const Assignment& assignment, NodeId node) {
  if (!game.topology().valid_node(node)) {
    throw std::out_of_range("neighbor_type_counts: invalid node id");
  }
  ClassState state = class_state_of(game, assignment);
  std::map<TypeId, int> counts;
  for (NodeId w : game.topology().neighbors(node)) {
    if (state[w] != 0) ++counts[state[w]];
  }
  return counts;
}

namespace {

Rational agent_fraction(const GameInstance& game, const Assignment& assignment, AgentId agent,
                        bool different) {
  int idx = game.agent_index(agent);
  NodeId node = assignment.node_of_index(idx);
  TypeId type = game.agents()[idx].type;
  ClassState state = class_state_of(game, assignment);
  Rational diverse = node_utility(game, state, node, type);
  if (different) return diverse;
  // Complement only when some neighbor is occupied.
  for (NodeId w : game.topology().neighbors(node)) {
    if (state[w] != 0) return Rational(1) - diverse;
  }
  return Rational(0);
}

}  // namespace

Rational utility(const GameInstance& game, const Assignment& assignment, AgentId agent) {
  return agent_fraction(game, assignment, agent, /*different=*/true);
}

Rational similarity_utility(const GameInstance& game, const Assignment& assignment,
                            AgentId agent) {
  return agent_fraction(game, assignment, agent, /*different=*/false);
}

Rational social_welfare(const GameInstance& game, const Assignment& assignment) {
  return social_welfare(game, class_state_of(game, assignment));
}

Rational social_welfare(const GameInstance& game, const ClassState& state) {
  Rational total(0);
  const auto& stubborn_at = game.stubborn_agent_index_by_node();
  for (NodeId v = 0; v < game.topology().node_count(); ++v) {
    if (state[v] == 0 || stubborn_at[v] >= 0) continue;
    total += node_utility(game, state, v, state[v]);
  }
  return total;
}

}  // namespace divjump
