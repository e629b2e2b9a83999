#include "divjump/oracle.hpp"

#include <string>
#include <vector>

namespace divjump {

namespace {

std::vector<NodeId> free_nodes_of(const GameInstance& game) {
  std::vector<NodeId> free;
  const auto& stubborn_at = game.stubborn_agent_index_by_node();
  for (NodeId v = 0; v < game.topology().node_count(); ++v) {
    if (stubborn_at[v] < 0) free.push_back(v);
  }
  return free;
}

__int128 binomial128(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > static_cast<__int128>(INT64_MAX) * 4) return static_cast<__int128>(INT64_MAX) + 1;
  }
  return result;
}

// Recursive placement of the per-type strategic counts over the free nodes,
// lexicographic within each type.
struct Enumerator {
  const GameInstance& game;
  const std::function<bool(const ClassState&)>& visit;
  std::vector<NodeId> free_nodes;
  std::vector<int> counts;  // strategic count per type, 1..k
  ClassState state;
  bool stopped = false;

  Enumerator(const GameInstance& g, const std::function<bool(const ClassState&)>& v)
      : game(g), visit(v), free_nodes(free_nodes_of(g)), counts(g.strategic_count_by_type()) {
    state.assign(g.topology().node_count(), 0);
    for (const auto& [id, node] : g.stubborn_placement()) {
      state[node] = static_cast<std::uint8_t>(g.agent(id).type);
    }
  }

  void run() {
    std::vector<bool> taken(free_nodes.size(), false);
    place_type(1, taken);
  }

  void place_type(TypeId type, std::vector<bool>& taken) {
    if (stopped) return;
    if (type > game.num_types()) {
      if (!visit(state)) stopped = true;
      return;
    }
    choose(type, taken, 0, counts[type]);
  }

  void choose(TypeId type, std::vector<bool>& taken, std::size_t start, int remaining) {
    if (stopped) return;
    if (remaining == 0) {
      place_type(type + 1, taken);
      return;
    }
    // i + remaining <= size bounds the indices that can still fit the rest.
    for (std::size_t i = start; i + remaining <= free_nodes.size(); ++i) {
      if (taken[i]) continue;
      taken[i] = true;
      state[free_nodes[i]] = static_cast<std::uint8_t>(type);
      choose(type, taken, i + 1, remaining - 1);
      state[free_nodes[i]] = 0;
      taken[i] = false;
      if (stopped) return;
    }
  }
};

}  // namespace

std::int64_t count_class_states(const GameInstance& game) {
  int free = static_cast<int>(free_nodes_of(game).size());
  const auto& counts = game.strategic_count_by_type();
  __int128 total = 1;
  int remaining = free;
  for (TypeId t = 1; t <= game.num_types(); ++t) {
    total *= binomial128(remaining, counts[t]);
    remaining -= counts[t];
    if (total > INT64_MAX) return INT64_MAX;
  }
  return static_cast<std::int64_t>(total);
}

void for_each_class_state(const GameInstance& game,
                          const std::function<bool(const ClassState&)>& visit) {
  Enumerator e(game, visit);
  e.run();
}

OracleReport brute_force(const GameInstance& game, std::int64_t budget) {
  if (budget <= 0) throw std::invalid_argument("brute_force: budget must be positive");
  std::int64_t states = count_class_states(game);
  if (states > budget) {
    throw BudgetExceeded("brute_force: " + std::to_string(states) + " class states exceed budget " +
                             std::to_string(budget),
                         states);
  }

  OracleReport report;
  std::optional<ClassState> best_state;
  std::optional<ClassState> worst_eq_state;

  for_each_class_state(game, [&](const ClassState& state) {
    ++report.total_states_examined;
    Rational welfare = social_welfare(game, state);
    if (!best_state || welfare > report.opt_welfare) {
      report.opt_welfare = welfare;
      best_state = state;
    }
    if (class_state_is_equilibrium(game, state)) {
      ++report.equilibrium_count;
      if (!report.min_eq_welfare || welfare < *report.min_eq_welfare) {
        report.min_eq_welfare = welfare;
        worst_eq_state = state;
      }
      if (!report.max_eq_welfare || welfare > *report.max_eq_welfare) {
        report.max_eq_welfare = welfare;
      }
    }
    return true;
  });

  if (best_state) report.example_optimum = assignment_from_class_state(game, *best_state);
  if (worst_eq_state) {
    report.example_equilibrium = assignment_from_class_state(game, *worst_eq_state);
  }
  if (report.min_eq_welfare) {
    if (report.min_eq_welfare->is_zero()) {
      report.poa_infinite = true;
    } else {
      report.poa = report.opt_welfare / *report.min_eq_welfare;
    }
    if (!report.max_eq_welfare->is_zero()) {
      report.pos = report.opt_welfare / *report.max_eq_welfare;
    }
  }
  return report;
}

}  // namespace divjump
