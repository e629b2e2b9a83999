#pragma once

#include <utility>
#include <vector>

namespace divjump {

using NodeId = int;
using Edge = std::pair<NodeId, NodeId>;

// Undirected simple graph with node ids 0..node_count-1. Adjacency lists are
// kept sorted ascending; that order is the canonical "left-to-right" order
// used by every rooted algorithm in this project.
class Topology {
 public:
  Topology(int node_count, std::vector<Edge> edges);

  int node_count() const { return node_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Edges normalized to u < v and sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }

  const std::vector<NodeId>& neighbors(NodeId v) const { return adjacency_.at(v); }
  int degree(NodeId v) const { return static_cast<int>(adjacency_.at(v).size()); }
  bool has_edge(NodeId u, NodeId v) const;
  bool valid_node(NodeId v) const { return v >= 0 && v < node_count_; }

  bool is_connected() const;
  bool is_tree() const;
  int max_degree() const;
  bool is_regular(int degree) const;

  // Distances from a root (-1 for unreachable nodes).
  std::vector<int> bfs_levels(NodeId root) const;

  friend bool operator==(const Topology& a, const Topology& b) {
    return a.node_count_ == b.node_count_ && a.edges_ == b.edges_;
  }

 private:
  int node_count_;
  std::vector<Edge> edges_;
  std::vector<std::vector<NodeId>> adjacency_;
};

}  // namespace divjump
