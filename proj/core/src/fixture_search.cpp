#include "divjump/fixture_search.hpp"

#include <vector>

#include "divjump/generators.hpp"
#include "divjump/oracle.hpp"

namespace divjump {

namespace {

constexpr NodeId kA = 0, kB = 1, kC = 2, kD1 = 3, kD2 = 4, kE1 = 5, kE2 = 6;

bool matches_pos_facts(const GameInstance& game) {
  OracleReport report = brute_force(game, 1000);
  if (report.equilibrium_count == 0) return false;
  if (report.opt_welfare != Rational(65, 12)) return false;
  if (!report.max_eq_welfare || *report.max_eq_welfare != Rational(62, 12)) return false;

  // Some optimal assignment must show the quoted 2/3 -> 3/4 deviation of the
  // agent at b toward the empty e-node.
  bool deviation_seen = false;
  for_each_class_state(game, [&](const ClassState& state) {
    if (social_welfare(game, state) != Rational(65, 12)) return true;
    if (state[kB] == 0) return true;
    NodeId empty_e = state[kE1] == 0 ? kE1 : (state[kE2] == 0 ? kE2 : -1);
    if (empty_e < 0) return true;
    TypeId type = state[kB];
    if (node_utility(game, state, kB, type) != Rational(2, 3)) return true;
    if (node_utility(game, state, empty_e, type, /*skip=*/kB) != Rational(3, 4)) return true;
    deviation_seen = true;
    return false;
  });
  return deviation_seen;
}

}  // namespace

std::optional<Topology> find_pos_fixture_topology() {
  // Free pairs: everything among {b, c, d1, d2, e1, e2} except the fixed
  // e1-e2 edge; a-b fixed, a has no other edges.
  std::vector<Edge> free_pairs;
  for (NodeId u = kB; u <= kE2; ++u) {
    for (NodeId v = u + 1; v <= kE2; ++v) {
      if (u == kE1 && v == kE2) continue;
      free_pairs.push_back({u, v});
    }
  }
  int combinations = 1 << free_pairs.size();
  for (int mask = 0; mask < combinations; ++mask) {
    std::vector<Edge> edges = {{kA, kB}, {kE1, kE2}};
    for (std::size_t i = 0; i < free_pairs.size(); ++i) {
      if (mask & (1 << i)) edges.push_back(free_pairs[i]);
    }
    Topology topo(7, edges);
    if (topo.degree(kD1) != 2 || topo.degree(kD2) != 2) continue;
    if (!topo.is_connected()) continue;
    GameInstance game = make_pos_game(topo);
    if (matches_pos_facts(game)) return topo;
  }
  return std::nullopt;
}

}  // namespace divjump
