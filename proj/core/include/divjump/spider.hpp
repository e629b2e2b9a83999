#pragma once

#include <optional>

#include "divjump/dynamics.hpp"

namespace divjump {

// A spider is a tree with exactly one node of degree >= 3 (the center).
// Returns the center when the topology is a spider. Throws on disconnected
// input.
std::optional<NodeId> spider_center(const Topology& topology);

inline bool is_spider(const Topology& topology) { return spider_center(topology).has_value(); }

// Upper bound on Phi(after) - Phi(before) for one improving move on a spider
// with a single empty node, classified by source/target node kind, adjacency
// to the center and the move's utilities. Requires m < 1/2.
Rational spider_move_delta_bound(const GameInstance& game, const Assignment& before,
                                 const Move& move, const PotentialConfig& config = {});

}  // namespace divjump
