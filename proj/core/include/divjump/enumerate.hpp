#pragma once

#include <vector>

#include "divjump/topology.hpp"

namespace divjump {

// Exact isomorphism test (backtracking with degree pruning). Intended for the
// small graphs this project enumerates.
bool graphs_isomorphic(const Topology& a, const Topology& b);

// All connected simple degree-regular graphs on `nodes` vertices, one
// representative per isomorphism class, in a deterministic order. Candidates
// come from a first-seen-labeling backtracking enumeration; duplicates are
// removed with an invariant pre-filter plus the exact isomorphism test.
std::vector<Topology> connected_regular_graphs(int nodes, int degree);

}  // namespace divjump
