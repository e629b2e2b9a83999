#include "divjump/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>

namespace divjump {

namespace {

// Per-vertex invariant: (degree, triangle count, sorted distance multiset).
// Graph invariant: the sorted list of per-vertex invariants. Collisions only
// cost extra isomorphism tests, never correctness.
using VertexSig = std::vector<int>;
using GraphSig = std::vector<VertexSig>;

GraphSig signature(const Topology& g) {
  GraphSig sig;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    VertexSig s;
    s.push_back(g.degree(v));
    int triangles = 0;
    for (NodeId a : g.neighbors(v)) {
      for (NodeId b : g.neighbors(v)) {
        if (a < b && g.has_edge(a, b)) ++triangles;
      }
    }
    s.push_back(triangles);
    std::vector<int> dist = g.bfs_levels(v);
    std::sort(dist.begin(), dist.end());
    s.insert(s.end(), dist.begin(), dist.end());
    sig.push_back(std::move(s));
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

bool extend_mapping(const Topology& a, const Topology& b, std::vector<int>& map_ab,
                    std::vector<char>& used_b, NodeId next) {
  if (next == a.node_count()) return true;
  for (NodeId cand = 0; cand < b.node_count(); ++cand) {
    if (used_b[cand] || b.degree(cand) != a.degree(next)) continue;
    bool ok = true;
    for (NodeId w : a.neighbors(next)) {
      if (w < next && !b.has_edge(map_ab[w], cand)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      // Also reject extra edges to already-mapped vertices.
      for (NodeId prev = 0; prev < next && ok; ++prev) {
        if (b.has_edge(map_ab[prev], cand) && !a.has_edge(prev, next)) ok = false;
      }
    }
    if (!ok) continue;
    map_ab[next] = cand;
    used_b[cand] = 1;
    if (extend_mapping(a, b, map_ab, used_b, next + 1)) return true;
    used_b[cand] = 0;
  }
  return false;
}

}  // namespace

bool graphs_isomorphic(const Topology& a, const Topology& b) {
  if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> deg_a, deg_b;
  for (NodeId v = 0; v < a.node_count(); ++v) deg_a.push_back(a.degree(v));
  for (NodeId v = 0; v < b.node_count(); ++v) deg_b.push_back(b.degree(v));
  std::sort(deg_a.begin(), deg_a.end());
  std::sort(deg_b.begin(), deg_b.end());
  if (deg_a != deg_b) return false;
  std::vector<int> map_ab(a.node_count(), -1);
  std::vector<char> used_b(b.node_count(), 0);
  return extend_mapping(a, b, map_ab, used_b, 0);
}

std::vector<Topology> connected_regular_graphs(int nodes, int degree) {
  if (nodes <= 0 || degree < 0) throw std::invalid_argument("connected_regular_graphs: bad input");
  std::vector<Topology> reps;
  if (degree >= nodes || (static_cast<std::int64_t>(nodes) * degree) % 2 != 0) return reps;
  if (degree == 0) {
    if (nodes == 1) reps.push_back(Topology(1, {}));
    return reps;
  }

  std::map<GraphSig, std::vector<std::size_t>> buckets;

  // adjacency under construction
  std::vector<std::vector<NodeId>> adj(nodes);
  std::vector<int> deg(nodes, 0);

  auto emit = [&]() {
    std::vector<Edge> edges;
    for (NodeId v = 0; v < nodes; ++v) {
      for (NodeId w : adj[v]) {
        if (v < w) edges.push_back({v, w});
      }
    }
    Topology candidate(nodes, std::move(edges));
    GraphSig sig = signature(candidate);
    auto& bucket = buckets[sig];
    for (std::size_t idx : bucket) {
      if (graphs_isomorphic(reps[idx], candidate)) return;
    }
    bucket.push_back(reps.size());
    reps.push_back(std::move(candidate));
  };

  // Process vertices in id order. Every new neighbor must take the next
  // unused consecutive label, which is exactly the first-seen (BFS-discovery)
  // labeling; every isomorphism class admits one, so nothing is missed.
  auto add_edge = [&](NodeId u, NodeId v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
    ++deg[u];
    ++deg[v];
  };
  auto remove_edge = [&](NodeId u, NodeId v) {
    adj[u].pop_back();
    adj[v].pop_back();
    --deg[u];
    --deg[v];
  };

  // choose `need` more neighbors for vertex v among old candidates (seen
  // vertices > v with spare degree) and fresh consecutive labels.
  std::function<void(NodeId, int)> process = [&](NodeId v, int introduced) {
    if (v == nodes) {
      emit();
      return;
    }
    if (v >= introduced) return;  // v was never reached: disconnected
    int need = degree - deg[v];
    if (need < 0) return;
    std::vector<NodeId> old_candidates;
    for (NodeId w = v + 1; w < introduced; ++w) {
      if (deg[w] < degree && !std::count(adj[v].begin(), adj[v].end(), w)) {
        old_candidates.push_back(w);
      }
    }
    // Pick s old neighbors (as a combination) and need-s new ones.
    std::function<void(std::size_t, int)> pick = [&](std::size_t start, int remaining) {
      if (remaining == 0) {
        process(v + 1, introduced);
        return;
      }
      // Option: take a fresh vertex for each remaining slot (only meaningful
      // once no further old candidate is taken; combinations stay sorted, so
      // fresh vertices are decided at the end).
      int fresh = remaining;
      if (introduced + fresh <= nodes) {
        std::vector<NodeId> added;
        for (int i = 0; i < fresh; ++i) {
          NodeId w = introduced + i;
          add_edge(v, w);
          added.push_back(w);
        }
        process(v + 1, introduced + fresh);
        for (auto it = added.rbegin(); it != added.rend(); ++it) remove_edge(v, *it);
      }
      for (std::size_t i = start; i < old_candidates.size(); ++i) {
        NodeId w = old_candidates[i];
        if (deg[w] >= degree) continue;
        add_edge(v, w);
        pick(i + 1, remaining - 1);
        remove_edge(v, w);
      }
    };
    pick(0, need);
  };

  // Vertex 0 takes labels 1..degree as its neighborhood.
  for (NodeId w = 1; w <= degree; ++w) add_edge(0, w);
  process(1, degree + 1);
  for (NodeId w = degree; w >= 1; --w) remove_edge(0, w);

  return reps;
}

}  // namespace divjump
