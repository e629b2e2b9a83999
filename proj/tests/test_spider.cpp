#include <doctest.h>

#include <random>

#include "divjump/dynamics.hpp"
#include "divjump/generators.hpp"
#include "divjump/spider.hpp"
#include "helpers.hpp"

using namespace divjump;
using namespace divjump::testing;

TEST_CASE("spider recognition") {
  CHECK(spider_center(gen_star(4)) == 0);
  CHECK_FALSE(spider_center(gen_line(5)).has_value());
  // Two degree-3 nodes.
  Topology two_centers(8, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {4, 6}, {6, 7}});
  CHECK_FALSE(spider_center(two_centers).has_value());
  CHECK(spider_center(gen_spider({2, 3, 1, 4})) == 0);
  Topology disconnected(4, {{0, 1}});
  CHECK_THROWS_AS(spider_center(disconnected), std::invalid_argument);
}

namespace {

// Spider with 3 legs of length 3: center 0; legs (1,2,3), (4,5,6), (7,8,9).
struct SpiderRig {
  GameInstance game;
  Assignment assignment;
};

SpiderRig rig(const std::vector<std::pair<NodeId, TypeId>>& occupied, int k = 2) {
  Topology topo = gen_spider({3, 3, 3});
  std::vector<TypeId> types;
  std::vector<NodeId> nodes;
  for (auto& [node, type] : occupied) {
    nodes.push_back(node);
    types.push_back(type);
  }
  GameInstance game = make_game(topo, types, k);
  Assignment a = place(game, nodes);
  return {std::move(game), std::move(a)};
}

Rational actual_delta(const GameInstance& game, const Assignment& before, const Move& move) {
  PotentialConfig cfg;
  return potential(game, apply_move(game, before, move), cfg) - potential(game, before, cfg);
}

}  // namespace

TEST_CASE("table bound: leaf to degree-2 with utilities 0 -> 1/2") {
  // Red leaf at 3 (neighbor 2 red); target 5 has neighbors 4 (red), 6 (blue).
  SpiderRig s = rig({{3, R}, {2, R}, {4, R}, {6, B}, {1, B}, {7, B}, {8, R}, {9, B}, {0, B}});
  REQUIRE(s.game.empty_node_count() == 1);
  std::vector<Move> moves = improving_moves(s.game, s.assignment, 0);
  REQUIRE(moves.size() == 1);
  CHECK(moves[0].to == 5);
  CHECK(moves[0].utility_before == Rational(0));
  CHECK(moves[0].utility_after == Rational(1, 2));
  Rational bound = spider_move_delta_bound(s.game, s.assignment, moves[0]);
  CHECK(bound == Rational(-1, 4));  // -m
  CHECK(actual_delta(s.game, s.assignment, moves[0]) <= bound);
}

TEST_CASE("table bound: degree-2 to leaf with utilities 1/2 -> 1") {
  // Red at 2 with neighbors 1 (blue), 3 (red); leaf 9 free with neighbor 8 blue.
  SpiderRig s = rig({{2, R}, {1, B}, {3, R}, {4, B}, {5, R}, {6, B}, {7, R}, {8, B}, {0, B}});
  REQUIRE(s.game.empty_node_count() == 1);
  std::vector<Move> moves = improving_moves(s.game, s.assignment, 0);
  REQUIRE(moves.size() == 1);
  CHECK(moves[0].to == 9);
  CHECK(moves[0].utility_before == Rational(1, 2));
  CHECK(moves[0].utility_after == Rational(1));
  Rational bound = spider_move_delta_bound(s.game, s.assignment, moves[0]);
  CHECK(bound == Rational(1, 4) - Rational(1));  // m - 1
  CHECK(actual_delta(s.game, s.assignment, moves[0]) <= bound);
}

TEST_CASE("table bound: center to leaf") {
  // Red at the center (utility < 1), leaf 6 free with blue neighbor 5.
  SpiderRig s = rig({{0, R}, {1, R}, {4, B}, {5, B}, {7, B}, {2, B}, {3, R}, {8, R}, {9, B}});
  REQUIRE(s.game.empty_node_count() == 1);
  std::vector<Move> moves = improving_moves(s.game, s.assignment, 0);
  REQUIRE(moves.size() == 1);
  CHECK(moves[0].to == 6);
  Rational m(1, 4);
  // -m + m*delta(c) - n_T(c, C0): center degree 3, one red neighbor (node 1).
  Rational bound = spider_move_delta_bound(s.game, s.assignment, moves[0]);
  CHECK(bound == -m + m * Rational(3) - Rational(1));
  CHECK(actual_delta(s.game, s.assignment, moves[0]) <= bound);
}

TEST_CASE("preconditions: non-spiders, extra empties, large m") {
  auto [line_game, line_a] = line_from("rb..");
  Move fake{0, 0, 2, Rational(0), Rational(1)};
  CHECK_THROWS(spider_move_delta_bound(line_game, line_a, fake));

  SpiderRig s = rig({{3, R}, {2, R}, {4, R}, {6, B}, {1, B}, {7, B}, {8, R}, {9, B}});
  std::vector<Move> moves = improving_moves(s.game, s.assignment, 0);
  REQUIRE(!moves.empty());
  CHECK_THROWS(spider_move_delta_bound(s.game, s.assignment, moves[0]));  // two empties

  SpiderRig full = rig({{3, R}, {2, R}, {4, R}, {6, B}, {1, B}, {7, B}, {8, R}, {9, B}, {0, B}});
  std::vector<Move> fm = improving_moves(full.game, full.assignment, 0);
  REQUIRE(!fm.empty());
  CHECK_THROWS(
      spider_move_delta_bound(full.game, full.assignment, fm[0], PotentialConfig{Rational(1, 2)}));
}

TEST_CASE("every executed spider move respects its table bound") {
  std::mt19937_64 seeds(23);
  for (int round = 0; round < 40; ++round) {
    std::vector<int> legs;
    int leg_count = 3 + static_cast<int>(seeds() % 3);
    for (int i = 0; i < leg_count; ++i) legs.push_back(1 + static_cast<int>(seeds() % 4));
    Topology topo = gen_spider(legs);
    int n = topo.node_count() - 1;
    std::vector<TypeId> types;
    for (int i = 0; i < n; ++i) types.push_back(1 + static_cast<int>(seeds() % 2));
    GameInstance game = make_game(topo, types);
    std::vector<NodeId> perm(topo.node_count());
    for (int v = 0; v < topo.node_count(); ++v) perm[v] = v;
    std::mt19937_64 rng(round);
    for (std::size_t i = perm.size(); i > 1; --i) {
      std::swap(perm[i - 1], perm[uniform_below(rng, i)]);
    }
    perm.resize(n);
    Assignment cursor = place(game, perm);
    IrdOptions options;
    options.policy = MovePolicy::Random;
    options.seed = round;
    RunOutcome out = run_ird(game, cursor, options);
    CHECK(out.status == RunStatus::Converged);
    for (const Move& m : out.trace) {
      Rational bound = spider_move_delta_bound(game, cursor, m);
      CHECK(actual_delta(game, cursor, m) <= bound);
      cursor = apply_move(game, cursor, m);
    }
  }
}
