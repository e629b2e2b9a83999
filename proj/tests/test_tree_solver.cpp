#include <doctest.h>

#include <random>
#include <set>

#include "divjump/equilibrium.hpp"
#include "divjump/generators.hpp"
#include "divjump/oracle.hpp"
#include "divjump/tree_solver.hpp"
#include "helpers.hpp"

using namespace divjump;
using namespace divjump::testing;

TEST_CASE("3-node path: red at v, blue below, root empty") {
  Topology path = gen_line(3);
  GameInstance game = make_game(path, {R, B});
  Assignment result = construct_tree_equilibrium(game);
  // Root is node 0 (smallest-id leaf); its neighbor 1 takes the first agent.
  CHECK(result.node_of(game, 0) == 1);
  CHECK(result.node_of(game, 1) == 2);
  CHECK(utility(game, result, 0) == Rational(1));
  CHECK(utility(game, result, 1) == Rational(1));
  CHECK(check_equilibrium(game, result).is_equilibrium);
}

TEST_CASE("single-empty star: non-majority agents end satisfied") {
  Topology star = gen_star(5);  // hub 0, leaves 1..5
  GameInstance game = make_game(star, {R, R, R, B, B});
  Assignment result = construct_tree_equilibrium(game);
  CHECK(check_equilibrium(game, result).is_equilibrium);
  for (AgentId id = 3; id < 5; ++id) {
    CHECK(utility(game, result, id) == Rational(1));
  }
}

TEST_CASE("three types on a deeper tree: every non-designated agent gets 1") {
  // Deterministic 12-node tree, 11 agents (5 red, 3 yellow, 3 blue).
  Topology tree = gen_tree(12, 99);
  std::vector<TypeId> types{1, 1, 1, 1, 1, 3, 3, 3, 2, 2, 2};
  GameInstance game = make_game(tree, types, 3);
  Assignment result = construct_tree_equilibrium(game);
  CHECK(check_equilibrium(game, result).is_equilibrium);
  // The designated type is the largest (type 1, placed first); all agents of
  // the other types must reach utility 1 in the single-empty case.
  for (AgentId id = 5; id < 11; ++id) {
    CHECK(utility(game, result, id) == Rational(1));
  }
}

TEST_CASE("precondition errors") {
  Topology cycle(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK_THROWS_AS(construct_tree_equilibrium(make_game(Topology(5, cycle.edges()), {R, B})),
                  NotATreeError);

  Topology path = gen_line(4);
  std::vector<Agent> agents{{0, R, AgentKind::Stubborn}, {1, B, AgentKind::Strategic}};
  GameInstance stubborn(path, 2, agents, {{0, 0}});
  CHECK_THROWS_AS(construct_tree_equilibrium(stubborn), StubbornPresentError);
}

TEST_CASE("all agents of one type still settle") {
  Topology tree = gen_tree(9, 4);
  GameInstance game = make_game(tree, {R, R, R, R, R}, 2);
  Assignment result = construct_tree_equilibrium(game);
  CHECK(check_equilibrium(game, result).is_equilibrium);
}

TEST_CASE("deterministic output for fixed input") {
  Topology tree = gen_tree(20, 7);
  std::vector<TypeId> types;
  for (int i = 0; i < 15; ++i) types.push_back(1 + (i % 3));
  GameInstance game = make_game(tree, types, 3);
  Assignment a = construct_tree_equilibrium(game);
  Assignment b = construct_tree_equilibrium(game);
  CHECK(a == b);
}

TEST_CASE("random trees: equilibrium and membership in the enumerated set") {
  std::mt19937_64 rng(2024);
  int brute_checked = 0;
  for (int round = 0; round < 60; ++round) {
    int nodes = 5 + static_cast<int>(rng() % 20);
    int empties = 1 + static_cast<int>(rng() % 5);
    int n = nodes - empties;
    if (n < 2) continue;
    int k = 2 + static_cast<int>(rng() % 4);
    Topology tree = gen_tree(nodes, rng());
    std::vector<TypeId> types;
    for (int i = 0; i < n; ++i) types.push_back(1 + static_cast<int>(rng() % k));
    GameInstance game = make_game(tree, types, k);
    Assignment result = construct_tree_equilibrium(game);
    CHECK(check_equilibrium(game, result).is_equilibrium);

    if (nodes <= 10 && count_class_states(game) <= 200000) {
      ClassState target = class_state_of(game, result);
      bool seen = false;
      for_each_class_state(game, [&](const ClassState& state) {
        if (state == target) {
          seen = class_state_is_equilibrium(game, state);
          return false;
        }
        return true;
      });
      CHECK(seen);
      ++brute_checked;
    }
  }
  CHECK(brute_checked > 0);
}
