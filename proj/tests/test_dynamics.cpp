#include <doctest.h>

#include <random>

#include "divjump/dynamics.hpp"
#include "divjump/equilibrium.hpp"
#include "divjump/generators.hpp"
#include "divjump/io.hpp"
#include "helpers.hpp"

using namespace divjump;
using namespace divjump::testing;

namespace {

GameInstance fixture_game() {
  return load_pos_fixture(std::string(DIVJUMP_FIXTURES_DIR) + "/pos_fixture.json");
}

}  // namespace

TEST_CASE("improving move on the pinned fixture's optimum: 2/3 -> 3/4") {
  GameInstance game = fixture_game();
  // Optimum: reds at b=1 and c=2, blues at a=0, d1=3, d2=4, e2=6; e1=5 empty.
  Assignment opt = place(game, {1, 2, 0, 3, 4, 6});
  REQUIRE(social_welfare(game, opt) == Rational(65, 12));
  std::vector<Move> moves = improving_moves(game, opt);
  REQUIRE(moves.size() == 1);
  CHECK(moves[0].agent == 0);
  CHECK(moves[0].from == 1);
  CHECK(moves[0].to == 5);
  CHECK(moves[0].utility_before == Rational(2, 3));
  CHECK(moves[0].utility_after == Rational(3, 4));
}

TEST_CASE("equilibrium assignments admit no improving moves") {
  GameInstance game = fixture_game();
  // Best equilibrium: red at a=0 and e2=6, blues at b=1, c=2, d1=3, d2=4.
  Assignment eq = place(game, {0, 6, 1, 2, 3, 4});
  CHECK(social_welfare(game, eq) == Rational(62, 12));
  CHECK(improving_moves(game, eq).empty());
  CHECK(check_equilibrium(game, eq).is_equilibrium);
}

TEST_CASE("3-node path with both agents satisfied") {
  auto [game, a] = line_from(".rb");
  CHECK(utility(game, a, 0) == Rational(1));
  CHECK(utility(game, a, 1) == Rational(1));
  CHECK(improving_moves(game, a).empty());
}

TEST_CASE("target utility is computed with the origin vacated") {
  // Hub 1 occupied red, its leaf 0 empty: jumping 1 -> 0 would see an empty
  // neighborhood, so it is never improving, even though node 0 is adjacent to
  // the red hub.
  Topology star(4, {{0, 1}, {1, 2}, {1, 3}});
  GameInstance game = make_game(star, {R, B, B});
  Assignment a = place(game, {1, 2, 3});
  CHECK(improving_moves(game, a, 0).empty());

  // With a second occupied neighbor the vacated origin still matters: blue at
  // 2 moving to 0 sees only the red hub.
  auto moves = improving_moves(game, a, 1);
  CHECK(moves.empty());  // blue already has utility 1
}

TEST_CASE("improving moves are ordered by (agent, target)") {
  auto [game, a] = line_from("..rr.b");
  std::vector<Move> moves = improving_moves(game, a);
  REQUIRE(moves.size() >= 2);
  for (std::size_t i = 1; i < moves.size(); ++i) {
    bool ordered = moves[i - 1].agent < moves[i].agent ||
                   (moves[i - 1].agent == moves[i].agent && moves[i - 1].to < moves[i].to);
    CHECK(ordered);
  }
}

TEST_CASE("stubborn agents have no moves and cannot be queried") {
  Topology path(4, {{0, 1}, {1, 2}, {2, 3}});
  std::vector<Agent> agents{{0, R, AgentKind::Stubborn}, {1, B, AgentKind::Strategic}};
  GameInstance game(path, 2, agents, {{0, 0}});
  Assignment a(game, {{0, 0}, {1, 2}});
  CHECK_THROWS_AS(improving_moves(game, a, 0), std::invalid_argument);
  for (const Move& m : improving_moves(game, a)) CHECK(m.agent != 0);
}

TEST_CASE("apply_move moves exactly one agent and validates") {
  auto [game, a] = line_from("rr.b");
  std::vector<Move> moves = improving_moves(game, a, 0);
  REQUIRE(moves.size() == 1);
  Assignment next = apply_move(game, a, moves[0]);
  CHECK(next.node_of(game, 0) == 2);
  CHECK(next.node_of(game, 1) == 1);
  CHECK(utility(game, next, 0) > utility(game, a, 0));
  // Reverse application restores the original placement.
  Move back{0, moves[0].to, moves[0].from, moves[0].utility_after, moves[0].utility_before};
  CHECK(apply_move(game, next, back) == a);
  // Errors: occupied target, wrong source.
  CHECK_THROWS(apply_move(game, a, Move{0, 0, 1, Rational(0), Rational(1)}));
  CHECK_THROWS(apply_move(game, a, Move{0, 3, 2, Rational(0), Rational(1)}));
}

TEST_CASE("potential values from the definition") {
  auto [game, a] = line_from("rb.");
  PotentialConfig quarter{Rational(1, 4)};
  CHECK(potential(game, a, quarter) == Rational(1, 4));  // 0 + m

  Topology k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  GameInstance clique = make_game(Topology(5, k4.edges()), {R, R, R, R});
  Assignment full = place(clique, {0, 1, 2, 3});
  CHECK(potential(clique, full, quarter) == Rational(6));

  CHECK_THROWS(potential(game, a, PotentialConfig{Rational(1)}));
  CHECK_THROWS(potential(game, a, PotentialConfig{Rational(0)}));
}

TEST_CASE("both-empty edges carry weight m") {
  auto [game, a] = line_from("r..b");
  PotentialConfig cfg{Rational(1, 4)};
  // edges: r-., .-., .-b  -> 3m
  CHECK(potential(game, a, cfg) == Rational(3, 4));
}

TEST_CASE("regular single-empty improving moves satisfy the x0 - x1 identity") {
  std::mt19937_64 seeds(5);
  for (int round = 0; round < 25; ++round) {
    Topology topo = gen_regular(10, 3, seeds());
    std::vector<TypeId> types;
    for (int i = 0; i < 9; ++i) types.push_back(1 + (i % 2));
    GameInstance game = make_game(topo, types);
    Assignment a = assignment_from_class_state(
        game, [&] {
          std::vector<NodeId> nodes(10);
          for (int v = 0; v < 10; ++v) nodes[v] = v;
          std::mt19937_64 rng(round);
          for (std::size_t i = nodes.size(); i > 1; --i) {
            std::swap(nodes[i - 1], nodes[uniform_below(rng, i)]);
          }
          ClassState st(10, 0);
          for (int i = 0; i < 9; ++i) st[nodes[i]] = static_cast<std::uint8_t>(types[i]);
          return st;
        }());
    PotentialConfig cfg{Rational(1, 4)};
    ClassState state = class_state_of(game, a);
    for (const Move& m : improving_moves(game, a)) {
      Assignment next = apply_move(game, a, m);
      Rational delta = potential(game, next, cfg) - potential(game, a, cfg);
      ClassState after = class_state_of(game, next);
      TypeId type = game.agent(m.agent).type;
      int x0 = 0, x1 = 0;
      for (NodeId w : topo.neighbors(m.from)) {
        if (state[w] != 0 && state[w] != type) ++x0;
      }
      for (NodeId w : topo.neighbors(m.to)) {
        if (after[w] != 0 && after[w] != type) ++x1;
      }
      CHECK(delta == Rational(x0 - x1));
      CHECK(delta <= Rational(-1));
    }
  }
}

TEST_CASE("run_ird converges on lines from any start") {
  std::mt19937_64 seeds(17);
  for (int round = 0; round < 20; ++round) {
    auto topo = gen_line(8 + static_cast<int>(seeds() % 6));
    int nodes = topo.node_count();
    int n = nodes - 1 - static_cast<int>(seeds() % 4);
    if (n < 2) n = 2;
    std::vector<TypeId> types;
    for (int i = 0; i < n; ++i) types.push_back(1 + static_cast<int>(seeds() % 2));
    GameInstance game = make_game(topo, types);
    std::vector<NodeId> nodes_perm(nodes);
    for (int v = 0; v < nodes; ++v) nodes_perm[v] = v;
    std::mt19937_64 rng(round);
    for (std::size_t i = nodes_perm.size(); i > 1; --i) {
      std::swap(nodes_perm[i - 1], nodes_perm[uniform_below(rng, i)]);
    }
    nodes_perm.resize(n);
    Assignment start = place(game, nodes_perm);
    IrdOptions options;
    options.policy = round % 3 == 0   ? MovePolicy::First
                     : round % 3 == 1 ? MovePolicy::BestResponse
                                      : MovePolicy::Random;
    options.seed = round;
    RunOutcome out = run_ird(game, start, options);
    CHECK(out.status == RunStatus::Converged);
    CHECK(improving_moves(game, out.final_assignment).empty());
  }
}

TEST_CASE("run_ird on an equilibrium start converges in 0 steps") {
  GameInstance game = fixture_game();
  Assignment eq = place(game, {0, 6, 1, 2, 3, 4});
  RunOutcome out = run_ird(game, eq, {});
  CHECK(out.status == RunStatus::Converged);
  CHECK(out.steps == 0);
  CHECK(out.trace.empty());
}

TEST_CASE("run_ird trace moves are valid and improving") {
  auto [game, start] = line_from("rrbb..");
  IrdOptions options;
  options.policy = MovePolicy::Random;
  options.seed = 42;
  RunOutcome out = run_ird(game, start, options);
  Assignment cursor = start;
  for (const Move& m : out.trace) {
    CHECK(m.utility_after > m.utility_before);
    cursor = apply_move(game, cursor, m);
  }
  CHECK(cursor == out.final_assignment);
}

TEST_CASE("run_ird rejects non-positive step limits") {
  auto [game, start] = line_from("rb..");
  IrdOptions options;
  options.max_steps = 0;
  CHECK_THROWS_AS(run_ird(game, start, options), std::invalid_argument);
}

TEST_CASE("cycle detection replays back to the repeated class state") {
  GameInstance game =
      read_game_file(std::string(DIVJUMP_FIXTURES_DIR) + "/tree_irc_witness.json");
  Assignment start = assignment_from_class_state(game, [&] {
    ClassState state(game.topology().node_count(), 0);
    for (const auto& [id, node] : game.stubborn_placement()) {
      state[node] = static_cast<std::uint8_t>(game.agent(id).type);
    }
    state[0] = 1;  // rover at x
    state[1] = 1;  // rover at y
    return state;
  }());
  IrdOptions options;
  options.policy = MovePolicy::First;
  RunOutcome out = run_ird(game, start, options);
  REQUIRE(out.status == RunStatus::CycleDetected);
  REQUIRE(out.cycle.has_value());
  Assignment cursor = *out.cycle_start;
  ClassState first = class_state_of(game, cursor);
  for (const Move& m : *out.cycle) {
    CHECK(m.utility_after > m.utility_before);
    cursor = apply_move(game, cursor, m);
  }
  CHECK(class_state_of(game, cursor) == first);
}
