#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>

#include "divjump/equilibrium.hpp"
#include "divjump/game.hpp"

namespace divjump {

// Exhaustive-search results over the occupant-class state space.
struct OracleReport {
  std::int64_t total_states_examined = 0;
  std::int64_t equilibrium_count = 0;
  Rational opt_welfare;
  std::optional<Rational> min_eq_welfare;
  std::optional<Rational> max_eq_welfare;
  std::optional<Rational> poa;
  std::optional<Rational> pos;
  // Set instead of poa when equilibria exist but the minimum equilibrium
  // welfare is zero.
  bool poa_infinite = false;
  std::optional<Assignment> example_equilibrium;  // a minimum-welfare equilibrium
  std::optional<Assignment> example_optimum;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string what, std::int64_t state_count)
      : std::runtime_error(std::move(what)), state_count(state_count) {}
  std::int64_t state_count;  // saturates at INT64_MAX
};

// Number of occupant-class states: a multinomial over the free nodes and the
// per-type strategic counts. Saturates at INT64_MAX.
std::int64_t count_class_states(const GameInstance& game);

// Enumerates every occupant-class state (stubborn nodes fixed) in a
// deterministic lexicographic order. Stops early when the visitor returns
// false.
void for_each_class_state(const GameInstance& game,
                          const std::function<bool(const ClassState&)>& visit);

// Full enumeration: equilibrium set summary, OPT, PoA and PoS as exact
// rationals. Throws BudgetExceeded when the state count exceeds the budget.
OracleReport brute_force(const GameInstance& game, std::int64_t budget);

}  // namespace divjump
