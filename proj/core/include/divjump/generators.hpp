#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "divjump/game.hpp"

namespace divjump {

Topology gen_line(int nodes);
Topology gen_star(int leaves);

// Center node 0, legs numbered consecutively. A spider needs >= 3 legs.
Topology gen_spider(const std::vector<int>& leg_lengths);

// Connected simple degree-regular graph by seeded stub matching with
// full restart on loops/multi-edges and rejection of disconnected samples.
Topology gen_regular(int nodes, int degree, std::uint64_t seed);

// Uniform random labeled tree (seeded Pruefer sequence).
Topology gen_tree(int nodes, std::uint64_t seed);

// Worst-case line equilibrium for k = 2 symmetric types: n even, n >= 8,
// n+1 nodes, welfare (n+4)/2. The returned assignment is an equilibrium.
std::pair<GameInstance, Assignment> gen_poa_line_equilibrium(int n);

// Block equilibrium on a line for k >= 3 symmetric types (k divides n):
// blocks of types 1..k-1 followed by all of type k and one empty node;
// welfare (k-1)n/k + 1/2.
std::pair<GameInstance, Assignment> gen_poa_line_ktypes(int n, int k);

// Star with n+1 nodes; k-1 singleton types plus one type of size n-k+1.
GameInstance gen_star_asymmetric(int n, int k);

// The pinned price-of-stability instance (7 nodes, 2 red + 4 blue agents).
GameInstance load_pos_fixture(const std::string& path);

// Builds the fixture game on an explicitly given 7-node topology.
GameInstance make_pos_game(Topology topology);

struct TypeCount {
  TypeId type;
  int strategic;
  int stubborn;
};

// Declarative instance description for files and the CLI.
struct InstanceSpec {
  std::string family;            // line|star|spider|tree_random|regular|gadget|pos_fixture|custom
  std::vector<int> int_params;   // family-specific (sizes, degree, leg lengths, s ...)
  std::uint64_t seed = 0;
  std::vector<TypeCount> type_profile;
  std::string custom_path;       // game file for family == custom
  std::string fixture_path;      // family == pos_fixture
};

GameInstance build_instance(const InstanceSpec& spec);

}  // namespace divjump
