#include <doctest.h>

#include <random>

#include "divjump/dynamics.hpp"
#include "divjump/equilibrium.hpp"
#include "divjump/gadget.hpp"
#include "divjump/generators.hpp"
#include "divjump/io.hpp"
#include "helpers.hpp"

using namespace divjump;
using namespace divjump::testing;

TEST_CASE("fixture equilibrium and non-equilibrium with witness") {
  GameInstance game = load_pos_fixture(std::string(DIVJUMP_FIXTURES_DIR) + "/pos_fixture.json");
  Assignment eq = place(game, {0, 6, 1, 2, 3, 4});
  CHECK(check_equilibrium(game, eq).is_equilibrium);

  Assignment opt = place(game, {1, 2, 0, 3, 4, 6});
  EquilibriumCheck check = check_equilibrium(game, opt);
  REQUIRE_FALSE(check.is_equilibrium);
  REQUIRE(check.witness.has_value());
  CHECK(check.witness->agent == 0);
  CHECK(check.witness->target == 5);
  CHECK(check.witness->utility_current == Rational(2, 3));
  CHECK(check.witness->utility_at_target == Rational(3, 4));
}

TEST_CASE("gadget yes-instance assignment is an equilibrium") {
  Gadget g = build_gadget(3, {{0, 1}, {1, 2}}, 2);
  Assignment a = gadget_independent_set_assignment(g, {0, 2});
  CHECK(check_equilibrium(g.game, a).is_equilibrium);
  // Utility accounting from the reduction: IS agents get (5s+1)/(7s+1).
  CHECK(utility(g.game, a, g.strategic_agents[0]) == Rational(11, 15));
  CHECK(utility(g.game, a, g.strategic_agents[2]) == Rational(1));
}

TEST_CASE("gadget rejects dependent vertex sets") {
  Gadget g = build_gadget(3, {{0, 1}, {1, 2}}, 2);
  CHECK_THROWS(gadget_independent_set_assignment(g, {0, 1}));
  CHECK_THROWS(gadget_independent_set_assignment(g, {0, 0}));
  CHECK_THROWS(gadget_independent_set_assignment(g, {0}));
}

TEST_CASE("x-and-z occupied: z's agent wants y for 5/7") {
  Gadget g = build_gadget(3, {{0, 1}, {1, 2}}, 2);
  std::map<AgentId, NodeId> placement = g.game.stubborn_placement();
  placement[g.strategic_agents[0]] = g.x;
  placement[g.strategic_agents[1]] = g.z;
  placement[g.strategic_agents[2]] = g.h_nodes[0];
  Assignment a(g.game, placement);
  CHECK(utility(g.game, a, g.strategic_agents[1]) == Rational(4, 7));
  std::vector<Move> moves = improving_moves(g.game, a, g.strategic_agents[1]);
  bool found = false;
  for (const Move& m : moves) {
    if (m.to == g.y) {
      found = true;
      CHECK(m.utility_after == Rational(5, 7));
    }
  }
  CHECK(found);
}

TEST_CASE("is_equilibrium agrees with the improving-move set") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 200; ++round) {
    int nodes = 4 + static_cast<int>(rng() % 8);
    Topology topo = gen_tree(nodes, rng());
    int n = 2 + static_cast<int>(rng() % (nodes - 2));
    std::vector<TypeId> types;
    for (int i = 0; i < n; ++i) types.push_back(1 + static_cast<int>(rng() % 2));
    GameInstance game = make_game(topo, types);
    std::vector<NodeId> perm(nodes);
    for (int v = 0; v < nodes; ++v) perm[v] = v;
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
    perm.resize(n);
    Assignment a = place(game, perm);
    EquilibriumCheck check = check_equilibrium(game, a);
    CHECK(check.is_equilibrium == improving_moves(game, a).empty());
    CHECK(check.is_equilibrium == class_state_is_equilibrium(game, class_state_of(game, a)));
    if (!check.is_equilibrium) {
      REQUIRE(check.witness.has_value());
      CHECK(check.witness->utility_at_target > check.witness->utility_current);
    }
  }
}
