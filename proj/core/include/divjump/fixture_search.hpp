#pragma once

#include <optional>

#include "divjump/game.hpp"

namespace divjump {

// Reconstructs the 7-node price-of-stability topology by constrained search
// over all graphs on nodes {a=0, b=1, c=2, d1=3, d2=4, e1=5, e2=6} with
//   - a's only neighbor is b,
//   - d1 and d2 have degree 2,
//   - e1 and e2 adjacent,
// keeping the lexicographically-first candidate whose 2-red/4-blue game has
// optimal welfare 65/12, best equilibrium welfare 62/12, and an optimal
// assignment whose b-occupant gains 2/3 -> 3/4 by deviating to the empty
// e-node. Deterministic; used once to pin the fixture file.
std::optional<Topology> find_pos_fixture_topology();

}  // namespace divjump
