#include "divjump/spider.hpp"

#include <stdexcept>

namespace divjump {

std::optional<NodeId> spider_center(const Topology& topology) {
  if (!topology.is_connected()) {
    throw std::invalid_argument("spider_center: topology is disconnected");
  }
  if (!topology.is_tree()) return std::nullopt;
  std::optional<NodeId> center;
  for (NodeId v = 0; v < topology.node_count(); ++v) {
    if (topology.degree(v) >= 3) {
      if (center) return std::nullopt;  // two high-degree nodes
      center = v;
    }
  }
  return center;
}

namespace {

enum class NodeKind { Leaf, Degree2, Center };

NodeKind kind_of(const Topology& topology, NodeId v, NodeId center) {
  if (v == center) return NodeKind::Center;
  return topology.degree(v) == 1 ? NodeKind::Leaf : NodeKind::Degree2;
}

int same_type_neighbors(const GameInstance& game, const ClassState& state, NodeId node,
                        TypeId type) {
  int count = 0;
  for (NodeId w : game.topology().neighbors(node)) {
    if (state[w] == type) ++count;
  }
  return count;
}

[[noreturn]] void unexpected(const char* what) {
  throw std::logic_error(std::string("spider_move_delta_bound: unclassifiable move: ") + what);
}

}  // namespace

Rational spider_move_delta_bound(const GameInstance& game, const Assignment& before,
                                 const Move& move, const PotentialConfig& config) {
  config.validate();
  if (config.m >= Rational(1, 2)) {
    throw std::invalid_argument("spider_move_delta_bound: requires m < 1/2");
  }
  auto center_opt = spider_center(game.topology());
  if (!center_opt) throw std::invalid_argument("spider_move_delta_bound: topology is not a spider");
  if (game.empty_node_count() != 1) {
    throw std::invalid_argument("spider_move_delta_bound: requires exactly one empty node");
  }
  NodeId center = *center_opt;
  const Topology& topo = game.topology();
  TypeId type = game.agent(move.agent).type;

  ClassState state_before = class_state_of(game, before);
  ClassState state_after = state_before;
  state_after[move.from] = 0;
  state_after[move.to] = static_cast<std::uint8_t>(type);

  Rational u0 = node_utility(game, state_before, move.from, type);
  Rational u1 = node_utility(game, state_after, move.to, type);

  const Rational m = config.m;
  const Rational one(1);
  const Rational half(1, 2);
  const Rational m_delta = m * Rational(topo.degree(center));

  NodeKind from_kind = kind_of(topo, move.from, center);
  NodeKind to_kind = kind_of(topo, move.to, center);
  bool adjacent = topo.has_edge(move.from, move.to);

  if (from_kind == NodeKind::Center) {
    Rational n0(same_type_neighbors(game, state_before, center, type));
    if (to_kind == NodeKind::Leaf) return -m + m_delta - n0;
    if (to_kind == NodeKind::Degree2) {
      if (u1 == half) return one - m - m + m_delta - n0;
      if (u1 == one) return -m - m + m_delta - n0;
      unexpected("center to degree-2 with unexpected target utility");
    }
    unexpected("center to center");
  }

  if (to_kind == NodeKind::Center) {
    Rational n1(same_type_neighbors(game, state_after, center, type));
    if (from_kind == NodeKind::Leaf) {
      return adjacent ? m + n1 - m_delta : m - one + n1 - m_delta;
    }
    // degree-2 source
    if (adjacent) {
      if (u0 != Rational(0)) unexpected("adjacent degree-2 source with nonzero utility");
      return m + m - one + n1 - m_delta;
    }
    if (u0 == Rational(0)) return m + m - Rational(2) + n1 - m_delta;
    if (u0 == half) return m + m - one + n1 - m_delta;
    unexpected("degree-2 to center with unexpected source utility");
  }

  // Moves not involving the center.
  if (from_kind == NodeKind::Degree2 && to_kind == NodeKind::Degree2) return -one;
  if (from_kind == NodeKind::Degree2 && to_kind == NodeKind::Leaf) {
    if (u0 == Rational(0)) return m - Rational(2);
    if (u0 == half) return m - one;
    unexpected("degree-2 to leaf with unexpected source utility");
  }
  if (from_kind == NodeKind::Leaf && to_kind == NodeKind::Degree2) return -m;
  if (from_kind == NodeKind::Leaf && to_kind == NodeKind::Leaf) return -one;
  unexpected("unreachable");
}

}  // namespace divjump
