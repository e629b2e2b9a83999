#include "divjump/tree_solver.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "divjump/equilibrium.hpp"

namespace divjump {

namespace {

// Working state for one construction run. Everything is indexed by node;
// occupant[v] is an agent index or -1.
struct Builder {
  const GameInstance& game;
  const Topology& topo;
  NodeId root = -1;
  std::vector<int> level;
  std::vector<NodeId> parent;
  std::vector<char> in_subtree;
  std::vector<int> occupant;
  TypeId red = 0;

  explicit Builder(const GameInstance& g)
      : game(g),
        topo(g.topology()),
        level(g.topology().node_count(), -1),
        parent(g.topology().node_count(), -1),
        in_subtree(g.topology().node_count(), 1),
        occupant(g.topology().node_count(), -1) {}

  bool occupied(NodeId v) const { return occupant[v] >= 0; }
  TypeId type_at(NodeId v) const { return game.agents()[occupant[v]].type; }
  bool is_red_node(NodeId v) const { return occupied(v) && type_at(v) == red; }

  std::vector<NodeId> child_agent_nodes(NodeId v) const {
    std::vector<NodeId> out;
    for (NodeId w : topo.neighbors(v)) {
      if (w != parent[v] && occupied(w)) out.push_back(w);
    }
    return out;
  }

  // Occupied neighbors other than `other`.
  int occupied_neighbors_besides(NodeId v, NodeId other) const {
    int count = 0;
    for (NodeId w : topo.neighbors(v)) {
      if (w != other && occupied(w)) ++count;
    }
    return count;
  }

  Rational utility_at(NodeId v) const {
    int occ = 0;
    int diff = 0;
    TypeId type = type_at(v);
    for (NodeId w : topo.neighbors(v)) {
      if (!occupied(w)) continue;
      ++occ;
      if (type_at(w) != type) ++diff;
    }
    return occ == 0 ? Rational(0) : Rational(diff, occ);
  }

  void pick_root() {
    for (NodeId v = 0; v < topo.node_count(); ++v) {
      if (topo.degree(v) == 1) {
        root = v;
        break;
      }
    }
    level = topo.bfs_levels(root);
    for (NodeId v = 0; v < topo.node_count(); ++v) {
      for (NodeId w : topo.neighbors(v)) {
        if (level[w] == level[v] - 1) parent[v] = w;
      }
    }
  }

  // Shrink to |R|+1 nodes: repeatedly delete a non-root leaf, deepest first,
  // ties broken toward the largest id. Levels are unaffected because only
  // leaves go.
  void extract_subtree() {
    int keep = game.agent_count() + 1;
    int size = topo.node_count();
    std::vector<int> live_degree(topo.node_count());
    for (NodeId v = 0; v < topo.node_count(); ++v) live_degree[v] = topo.degree(v);
    while (size > keep) {
      NodeId victim = -1;
      for (NodeId v = 0; v < topo.node_count(); ++v) {
        if (!in_subtree[v] || v == root || live_degree[v] != 1) continue;
        if (victim < 0 || level[v] > level[victim] ||
            (level[v] == level[victim] && v > victim)) {
          victim = v;
        }
      }
      in_subtree[victim] = 0;
      --size;
      for (NodeId w : topo.neighbors(victim)) {
        if (in_subtree[w]) --live_degree[w];
      }
      live_degree[victim] = 0;
    }
  }

  // Agents pre-ordered by type: types by descending size then ascending id,
  // agents within a type by id.
  std::vector<int> agent_order() const {
    std::vector<int> type_size(game.num_types() + 1, 0);
    for (const Agent& a : game.agents()) ++type_size[a.type];
    std::vector<TypeId> types;
    for (TypeId t = 1; t <= game.num_types(); ++t) {
      if (type_size[t] > 0) types.push_back(t);
    }
    std::sort(types.begin(), types.end(), [&](TypeId a, TypeId b) {
      if (type_size[a] != type_size[b]) return type_size[a] > type_size[b];
      return a < b;
    });
    std::vector<int> order;
    for (TypeId t : types) {
      for (int i = 0; i < game.agent_count(); ++i) {
        if (game.agents()[i].type == t) order.push_back(i);
      }
    }
    return order;
  }

  // Phase 1: odd levels deepest-first, left to right, ending at the unique
  // level-1 node v whose type becomes "red". Phase 2: even levels from level
  // 2 downward. Only the root stays empty in the subtree.
  void two_phase_fill() {
    int deepest = 0;
    std::vector<std::vector<NodeId>> by_level(topo.node_count() + 1);
    for (NodeId v = 0; v < topo.node_count(); ++v) {
      if (!in_subtree[v] || v == root) continue;
      by_level[level[v]].push_back(v);
      deepest = std::max(deepest, level[v]);
    }
    std::vector<int> order = agent_order();
    std::size_t next = 0;
    int start_odd = deepest % 2 == 1 ? deepest : deepest - 1;
    for (int l = start_odd; l >= 1; l -= 2) {
      for (NodeId v : by_level[l]) occupant[v] = order[next++];
    }
    NodeId v1 = by_level[1].front();
    red = type_at(v1);
    for (int l = 2; l <= deepest; l += 2) {
      for (NodeId v : by_level[l]) occupant[v] = order[next++];
    }
  }

  std::vector<NodeId> mixed_agent_nodes() const {
    std::vector<NodeId> mixed;
    for (NodeId v = 0; v < topo.node_count(); ++v) {
      if (!is_red_node(v)) continue;
      bool red_child = false;
      bool other_child = false;
      for (NodeId w : child_agent_nodes(v)) {
        (is_red_node(w) ? red_child : other_child) = true;
      }
      if (red_child && other_child) mixed.push_back(v);
    }
    std::sort(mixed.begin(), mixed.end(),
              [&](NodeId a, NodeId b) { return level[a] != level[b] ? level[a] < level[b] : a < b; });
    return mixed;
  }

  void swap_occupants(NodeId a, NodeId b) { std::swap(occupant[a], occupant[b]); }

  // Local adjustment around one mixed agent: exchange its red children that
  // still touch other agents (S1) with its non-red children that touch none
  // (S2). A mixed child participates first.
  void preprocess_mixed(NodeId anchor, std::optional<NodeId> other_mixed) {
    std::vector<NodeId> s1;
    std::vector<NodeId> s2;
    std::vector<NodeId> non_red_children;
    for (NodeId w : child_agent_nodes(anchor)) {
      if (is_red_node(w)) {
        if (occupied_neighbors_besides(w, anchor) >= 1) s1.push_back(w);
      } else {
        non_red_children.push_back(w);
        if (occupied_neighbors_besides(w, anchor) == 0) s2.push_back(w);
      }
    }
    bool other_is_child = other_mixed && parent[*other_mixed] == anchor;
    if (s2.empty()) {
      if (other_is_child && !non_red_children.empty()) {
        swap_occupants(*other_mixed, non_red_children.front());
      }
      return;
    }
    if (other_is_child) {
      // Put the second mixed agent first so it is guaranteed to swap.
      auto it = std::find(s1.begin(), s1.end(), *other_mixed);
      if (it != s1.end()) std::rotate(s1.begin(), it, it + 1);
    }
    std::size_t swaps = std::min(s1.size(), s2.size());
    for (std::size_t i = 0; i < swaps; ++i) swap_occupants(s1[i], s2[i]);
  }

  void preprocess() {
    std::vector<NodeId> mixed = mixed_agent_nodes();
    if (mixed.empty()) return;
    if (mixed.size() > 2) {
      throw InternalVerificationError(
          "construct_tree_equilibrium: more than two mixed agents after the fill");
    }
    NodeId anchor = mixed.front();
    std::optional<NodeId> second;
    if (mixed.size() == 2) second = mixed[1];
    preprocess_mixed(anchor, second);
    // The swap may have demoted the second agent; recompute before treating it.
    std::vector<NodeId> still_mixed = mixed_agent_nodes();
    for (NodeId v : still_mixed) {
      if (v != anchor) preprocess_mixed(v, std::nullopt);
    }
  }

  // Candidates: zero-utility red agents by (level, node id); a mixed agent is
  // appended only when some red child keeps positive utility and all of its
  // non-red children have children of their own.
  std::vector<NodeId> candidate_nodes() const {
    std::vector<NodeId> zeros;
    for (NodeId v = 0; v < topo.node_count(); ++v) {
      if (is_red_node(v) && utility_at(v).is_zero()) zeros.push_back(v);
    }
    std::sort(zeros.begin(), zeros.end(),
              [&](NodeId a, NodeId b) { return level[a] != level[b] ? level[a] < level[b] : a < b; });
    for (NodeId v : mixed_agent_nodes()) {
      bool all_red_children_zero = true;
      bool non_red_children_have_children = true;
      for (NodeId w : child_agent_nodes(v)) {
        if (is_red_node(w)) {
          if (!utility_at(w).is_zero()) all_red_children_zero = false;
        } else if (child_agent_nodes(w).empty()) {
          non_red_children_have_children = false;
        }
      }
      if (!all_red_children_zero && non_red_children_have_children) zeros.push_back(v);
    }
    return zeros;
  }

  // Empty, at least one occupied neighbor, all occupied neighbors non-red.
  std::optional<NodeId> first_available_node() const {
    for (NodeId v = 0; v < topo.node_count(); ++v) {
      if (occupied(v)) continue;
      int occ = 0;
      bool red_neighbor = false;
      for (NodeId w : topo.neighbors(v)) {
        if (!occupied(w)) continue;
        ++occ;
        if (is_red_node(w)) red_neighbor = true;
      }
      if (occ >= 1 && !red_neighbor) return v;
    }
    return std::nullopt;
  }

  void relocate_candidates() {
    for (NodeId from : candidate_nodes()) {
      std::optional<NodeId> target = first_available_node();
      if (!target) break;
      occupant[*target] = occupant[from];
      occupant[from] = -1;
    }
  }

  Assignment result() const {
    std::vector<NodeId> node_by_index(game.agent_count(), -1);
    for (NodeId v = 0; v < topo.node_count(); ++v) {
      if (occupant[v] >= 0) node_by_index[occupant[v]] = v;
    }
    return Assignment(game, std::move(node_by_index));
  }
};

}  // namespace

Assignment construct_tree_equilibrium(const GameInstance& game) {
  if (!game.topology().is_tree()) {
    throw NotATreeError("construct_tree_equilibrium: topology is not a tree");
  }
  if (!game.all_strategic()) {
    throw StubbornPresentError("construct_tree_equilibrium: stubborn agents present");
  }
  if (game.topology().node_count() < game.agent_count() + 1) {
    throw TooManyAgentsError("construct_tree_equilibrium: need |V| >= |R| + 1");
  }

  Builder b(game);
  b.pick_root();
  b.extract_subtree();
  b.two_phase_fill();
  b.preprocess();
  b.relocate_candidates();

  Assignment result = b.result();
  if (!check_equilibrium(game, result)) {
    throw InternalVerificationError(
        "construct_tree_equilibrium: post-check failed, constructed assignment is not an equilibrium");
  }
  return result;
}

}  // namespace divjump
