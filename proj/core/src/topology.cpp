#include "divjump/topology.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace divjump {

Topology::Topology(int node_count, std::vector<Edge> edges)
    : node_count_(node_count) {
  if (node_count <= 0) {
    throw std::invalid_argument("Topology: node_count must be positive");
  }
  std::set<Edge> seen;
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("Topology: self-loop at node " + std::to_string(u));
    if (u < 0 || v < 0 || u >= node_count || v >= node_count) {
      throw std::invalid_argument("Topology: edge endpoint out of range");
    }
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) {
      throw std::invalid_argument("Topology: duplicate edge");
    }
  }
  edges_.assign(seen.begin(), seen.end());
  adjacency_.assign(node_count, {});
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Topology::has_edge(NodeId u, NodeId v) const {
  if (!valid_node(u) || !valid_node(v)) return false;
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<int> Topology::bfs_levels(NodeId root) const {
  if (!valid_node(root)) throw std::out_of_range("Topology: invalid root node");
  std::vector<int> level(node_count_, -1);
  std::queue<NodeId> queue;
  level[root] = 0;
  queue.push(root);
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop();
    for (NodeId w : adjacency_[u]) {
      if (level[w] < 0) {
        level[w] = level[u] + 1;
        queue.push(w);
      }
    }
  }
  return level;
}

bool Topology::is_connected() const {
  auto level = bfs_levels(0);
  return std::none_of(level.begin(), level.end(), [](int l) { return l < 0; });
}

bool Topology::is_tree() const {
  return edge_count() == node_count_ - 1 && is_connected();
}

int Topology::max_degree() const {
  int best = 0;
  for (NodeId v = 0; v < node_count_; ++v) best = std::max(best, degree(v));
  return best;
}

bool Topology::is_regular(int degree) const {
  for (NodeId v = 0; v < node_count_; ++v) {
    if (this->degree(v) != degree) return false;
  }
  return true;
}

}  // namespace divjump
