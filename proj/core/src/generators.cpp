#include "divjump/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "divjump/dynamics.hpp"
#include "divjump/gadget.hpp"
#include "divjump/io.hpp"

namespace divjump {

Topology gen_line(int nodes) {
  if (nodes < 1) throw std::invalid_argument("gen_line: need at least one node");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < nodes; ++v) edges.push_back({v, v + 1});
  return Topology(nodes, std::move(edges));
}

Topology gen_star(int leaves) {
  if (leaves < 1) throw std::invalid_argument("gen_star: need at least one leaf");
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Topology(leaves + 1, std::move(edges));
}

Topology gen_spider(const std::vector<int>& leg_lengths) {
  if (leg_lengths.size() < 3) {
    throw std::invalid_argument("gen_spider: a spider needs at least 3 legs");
  }
  for (int len : leg_lengths) {
    if (len < 1) throw std::invalid_argument("gen_spider: leg lengths must be positive");
  }
  std::vector<Edge> edges;
  int next = 1;
  for (int len : leg_lengths) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      edges.push_back({prev, next});
      prev = next++;
    }
  }
  return Topology(next, std::move(edges));
}

Topology gen_regular(int nodes, int degree, std::uint64_t seed) {
  if (degree < 0 || degree >= nodes || (static_cast<std::int64_t>(nodes) * degree) % 2 != 0) {
    throw std::invalid_argument("gen_regular: infeasible degree sequence");
  }
  std::mt19937_64 rng(seed);
  std::vector<int> stubs(static_cast<std::size_t>(nodes) * degree);
  for (int v = 0; v < nodes; ++v) {
    for (int i = 0; i < degree; ++i) stubs[static_cast<std::size_t>(v) * degree + i] = v;
  }
  for (int attempt = 0; attempt < 100000; ++attempt) {
    // Fisher-Yates with the deterministic draw.
    for (std::size_t i = stubs.size(); i > 1; --i) {
      std::swap(stubs[i - 1], stubs[uniform_below(rng, i)]);
    }
    std::vector<Edge> edges;
    bool ok = true;
    std::set<Edge> seen;
    for (std::size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
      int u = stubs[i];
      int v = stubs[i + 1];
      if (u == v) ok = false;
      if (ok) {
        Edge e{std::min(u, v), std::max(u, v)};
        if (!seen.insert(e).second) ok = false;
        edges.push_back(e);
      }
    }
    if (!ok) continue;
    Topology topo(nodes, std::move(edges));
    if (topo.is_connected()) return topo;
  }
  throw std::runtime_error("gen_regular: pairing failed to produce a connected simple graph");
}

Topology gen_tree(int nodes, std::uint64_t seed) {
  if (nodes < 1) throw std::invalid_argument("gen_tree: need at least one node");
  if (nodes <= 2) return gen_line(nodes);
  std::mt19937_64 rng(seed);
  std::vector<int> pruefer(nodes - 2);
  for (int& p : pruefer) p = static_cast<int>(uniform_below(rng, nodes));
  std::vector<int> degree(nodes, 1);
  for (int p : pruefer) ++degree[p];
  std::vector<Edge> edges;
  std::set<int> leaves;
  for (int v = 0; v < nodes; ++v) {
    if (degree[v] == 1) leaves.insert(v);
  }
  for (int p : pruefer) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.push_back({leaf, p});
    if (--degree[p] == 1) leaves.insert(p);
  }
  int a = *leaves.begin();
  int b = *std::next(leaves.begin());
  edges.push_back({a, b});
  return Topology(nodes, std::move(edges));
}

namespace {

constexpr TypeId kRed = 1;
constexpr TypeId kBlue = 2;

std::pair<GameInstance, Assignment> line_game_from_pattern(const std::vector<TypeId>& pattern,
                                                           int k) {
  // pattern[i] is the type at line node i, 0 for the empty node.
  int n = 0;
  for (TypeId t : pattern) {
    if (t != 0) ++n;
  }
  std::vector<Agent> agents;
  std::map<AgentId, NodeId> placement_map;
  AgentId id = 0;
  for (NodeId v = 0; v < static_cast<int>(pattern.size()); ++v) {
    if (pattern[v] == 0) continue;
    agents.push_back({id, pattern[v], AgentKind::Strategic});
    placement_map[id] = v;
    ++id;
  }
  GameInstance game(gen_line(static_cast<int>(pattern.size())), k, std::move(agents), {});
  Assignment assignment(game, placement_map);
  return {std::move(game), std::move(assignment)};
}

}  // namespace

std::pair<GameInstance, Assignment> gen_poa_line_equilibrium(int n) {
  if (n < 8 || n % 2 != 0) {
    throw std::invalid_argument("gen_poa_line_equilibrium: n must be even and at least 8");
  }
  // Alternating-pair pattern around the empty node: exactly four agents (the
  // two line ends and the two neighbors of the empty node) get utility 1,
  // everyone else gets 1/2.
  std::vector<TypeId> pattern;
  auto push_pair = [&](TypeId t) {
    pattern.push_back(t);
    pattern.push_back(t);
  };
  if (n % 4 == 2) {
    // r (bbrr)^t bb r | v | b r
    int t = (n - 6) / 4;
    pattern.push_back(kRed);
    for (int i = 0; i < t; ++i) {
      push_pair(kBlue);
      push_pair(kRed);
    }
    push_pair(kBlue);
    pattern.push_back(kRed);
    pattern.push_back(0);
    pattern.push_back(kBlue);
    pattern.push_back(kRed);
  } else {
    // r (bbrr)^a bb r | v | b rr (bbrr)^c b with a + c = (n - 8) / 4
    int blocks = (n - 8) / 4;
    int a = (blocks + 1) / 2;
    int c = blocks - a;
    pattern.push_back(kRed);
    for (int i = 0; i < a; ++i) {
      push_pair(kBlue);
      push_pair(kRed);
    }
    push_pair(kBlue);
    pattern.push_back(kRed);
    pattern.push_back(0);
    pattern.push_back(kBlue);
    push_pair(kRed);
    for (int i = 0; i < c; ++i) {
      push_pair(kBlue);
      push_pair(kRed);
    }
    pattern.push_back(kBlue);
  }
  if (static_cast<int>(pattern.size()) != n + 1) {
    throw std::logic_error("gen_poa_line_equilibrium: pattern construction is off");
  }
  return line_game_from_pattern(pattern, 2);
}

std::pair<GameInstance, Assignment> gen_poa_line_ktypes(int n, int k) {
  if (k < 3) throw std::invalid_argument("gen_poa_line_ktypes: k must be at least 3");
  if (n % k != 0 || n <= 0) throw std::invalid_argument("gen_poa_line_ktypes: k must divide n");
  int per_type = n / k;
  std::vector<TypeId> pattern;
  for (int rep = 0; rep < per_type; ++rep) {
    for (TypeId t = 1; t <= k - 1; ++t) pattern.push_back(t);
  }
  for (int i = 0; i < per_type; ++i) pattern.push_back(k);
  pattern.push_back(0);
  return line_game_from_pattern(pattern, k);
}

GameInstance gen_star_asymmetric(int n, int k) {
  if (k < 2 || k > n) throw std::invalid_argument("gen_star_asymmetric: need 2 <= k <= n");
  std::vector<Agent> agents;
  // Types 1..k-1 are singletons; type k is the large ("red") one.
  AgentId id = 0;
  for (TypeId t = 1; t <= k - 1; ++t) agents.push_back({id++, t, AgentKind::Strategic});
  for (int i = 0; i < n - k + 1; ++i) agents.push_back({id++, k, AgentKind::Strategic});
  return GameInstance(gen_star(n), k, std::move(agents), {});
}

GameInstance make_pos_game(Topology topology) {
  if (topology.node_count() != 7) {
    throw std::invalid_argument("make_pos_game: the fixture topology has 7 nodes");
  }
  std::vector<Agent> agents;
  for (AgentId id = 0; id < 2; ++id) agents.push_back({id, kRed, AgentKind::Strategic});
  for (AgentId id = 2; id < 6; ++id) agents.push_back({id, kBlue, AgentKind::Strategic});
  return GameInstance(std::move(topology), 2, std::move(agents), {});
}

GameInstance load_pos_fixture(const std::string& path) {
  GameInstance game = read_game_file(path);
  if (game.topology().node_count() != 7 || game.agent_count() != 6) {
    throw std::runtime_error("load_pos_fixture: " + path + " is not the 7-node fixture");
  }
  return game;
}

GameInstance build_instance(const InstanceSpec& spec) {
  auto params_at = [&](std::size_t i) -> int {
    if (i >= spec.int_params.size()) {
      throw std::invalid_argument("InstanceSpec: missing integer parameter for family " +
                                  spec.family);
    }
    return spec.int_params[i];
  };
  auto with_profile = [&](Topology topo) {
    if (spec.type_profile.empty()) {
      throw std::invalid_argument("InstanceSpec: type_profile required for family " + spec.family);
    }
    int k = 0;
    for (const TypeCount& tc : spec.type_profile) k = std::max(k, tc.type);
    std::vector<Agent> agents;
    std::map<AgentId, NodeId> placement;
    AgentId id = 0;
    for (const TypeCount& tc : spec.type_profile) {
      for (int i = 0; i < tc.strategic; ++i) agents.push_back({id++, tc.type, AgentKind::Strategic});
    }
    // Stubborn agents are pinned to the highest-id nodes, types in profile order.
    NodeId next = topo.node_count() - 1;
    for (const TypeCount& tc : spec.type_profile) {
      for (int i = 0; i < tc.stubborn; ++i) {
        agents.push_back({id, tc.type, AgentKind::Stubborn});
        placement[id] = next--;
        ++id;
      }
    }
    return GameInstance(std::move(topo), std::max(k, 2), std::move(agents), std::move(placement));
  };

  if (spec.family == "line") return with_profile(gen_line(params_at(0)));
  if (spec.family == "star") return with_profile(gen_star(params_at(0)));
  if (spec.family == "spider") {
    std::vector<int> legs(spec.int_params.begin(), spec.int_params.end());
    return with_profile(gen_spider(legs));
  }
  if (spec.family == "tree_random") return with_profile(gen_tree(params_at(0), spec.seed));
  if (spec.family == "regular") {
    return with_profile(gen_regular(params_at(0), params_at(1), spec.seed));
  }
  if (spec.family == "gadget") {
    // Parameters: s, |X|, then H's edges flattened as pairs.
    int s = params_at(0);
    int hn = params_at(1);
    std::vector<Edge> h_edges;
    for (std::size_t i = 2; i + 1 < spec.int_params.size(); i += 2) {
      h_edges.push_back({spec.int_params[i], spec.int_params[i + 1]});
    }
    return build_gadget(hn, h_edges, s).game;
  }
  if (spec.family == "pos_fixture") return load_pos_fixture(spec.fixture_path);
  if (spec.family == "custom") return read_game_file(spec.custom_path);
  throw std::invalid_argument("InstanceSpec: unknown family '" + spec.family + "'");
}

}  // namespace divjump
