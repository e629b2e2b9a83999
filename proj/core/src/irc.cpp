#include "divjump/irc.hpp"

#include <stdexcept>
#include <unordered_map>

#include "divjump/enumerate.hpp"
#include "divjump/oracle.hpp"

namespace divjump {

namespace {

struct ClassMove {
  TypeId type;
  NodeId from;
  NodeId to;
};

struct StateHash {
  std::size_t operator()(const ClassState& s) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint8_t b : s) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return h;
  }
};

enum Color : std::uint8_t { Gray = 0, Black = 1 };

std::vector<ClassMove> class_moves(const GameInstance& game, const ClassState& state) {
  const auto& stubborn_at = game.stubborn_agent_index_by_node();
  int node_count = game.topology().node_count();
  std::vector<NodeId> empties;
  for (NodeId v = 0; v < node_count; ++v) {
    if (state[v] == 0) empties.push_back(v);
  }
  std::vector<ClassMove> moves;
  for (NodeId from = 0; from < node_count; ++from) {
    if (state[from] == 0 || stubborn_at[from] >= 0) continue;
    TypeId type = state[from];
    Rational before = node_utility(game, state, from, type);
    if (before == Rational(1)) continue;
    for (NodeId to : empties) {
      if (node_utility(game, state, to, type, /*skip=*/from) > before) {
        moves.push_back(ClassMove{type, from, to});
      }
    }
  }
  return moves;
}

ClassState successor(const ClassState& state, const ClassMove& move) {
  ClassState next = state;
  next[move.from] = 0;
  next[move.to] = static_cast<std::uint8_t>(move.type);
  return next;
}

// Materializes agent-level moves along a class-move cycle and verifies that
// every step improves and that the class state closes.
IrcResult materialize_cycle(const GameInstance& game, const ClassState& start,
                            const std::vector<ClassMove>& cycle_moves, std::int64_t visited) {
  IrcResult result{IrcStatus::CycleFound, {}, std::nullopt, visited};
  Assignment current = assignment_from_class_state(game, start);
  result.cycle_start = current;
  for (const ClassMove& cm : cycle_moves) {
    std::vector<int> occupant = occupant_index_by_node(game, current);
    int idx = occupant[cm.from];
    if (idx < 0) throw std::logic_error("find_irc: cycle replay lost an occupant");
    ClassState state = class_state_of(game, current);
    Rational before = node_utility(game, state, cm.from, cm.type);
    Rational after = node_utility(game, state, cm.to, cm.type, /*skip=*/cm.from);
    if (!(after > before)) throw std::logic_error("find_irc: cycle replay move not improving");
    Move move{game.agents()[idx].id, cm.from, cm.to, before, after};
    current = apply_move(game, current, move);
    result.cycle.push_back(move);
  }
  if (class_state_of(game, current) != start) {
    throw std::logic_error("find_irc: cycle replay did not close");
  }
  return result;
}

}  // namespace

IrcResult find_irc(const GameInstance& game, std::int64_t state_budget) {
  if (state_budget <= 0) throw std::invalid_argument("find_irc: state budget must be positive");

  std::unordered_map<ClassState, std::uint8_t, StateHash> color;
  bool budget_hit = false;

  struct Frame {
    ClassState state;
    std::vector<ClassMove> moves;
    std::size_t next = 0;
  };

  std::optional<IrcResult> found;

  auto dfs_from = [&](const ClassState& root) {
    if (found || budget_hit) return;
    if (color.count(root)) return;
    if (static_cast<std::int64_t>(color.size()) >= state_budget) {
      budget_hit = true;
      return;
    }
    std::vector<Frame> stack;
    std::unordered_map<ClassState, std::size_t, StateHash> on_stack;
    color.emplace(root, Gray);
    stack.push_back(Frame{root, class_moves(game, root)});
    on_stack.emplace(root, 0);
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.next >= top.moves.size()) {
        color[top.state] = Black;
        on_stack.erase(top.state);
        stack.pop_back();
        continue;
      }
      const ClassMove& move = top.moves[top.next++];
      ClassState next = successor(top.state, move);
      auto it = color.find(next);
      if (it != color.end()) {
        if (it->second == Gray) {
          // Cycle: stack segment from the first occurrence of `next`.
          std::size_t begin = on_stack.at(next);
          std::vector<ClassMove> cycle_moves;
          for (std::size_t i = begin; i + 1 < stack.size(); ++i) {
            cycle_moves.push_back(stack[i].moves[stack[i].next - 1]);
          }
          cycle_moves.push_back(move);
          found = materialize_cycle(game, stack[begin].state, cycle_moves,
                                    static_cast<std::int64_t>(color.size()));
          return;
        }
        continue;  // black: already explored without finding a cycle through it
      }
      if (static_cast<std::int64_t>(color.size()) >= state_budget) {
        budget_hit = true;
        return;
      }
      color.emplace(next, Gray);
      on_stack.emplace(next, stack.size());
      stack.push_back(Frame{std::move(next), {}});
      stack.back().moves = class_moves(game, stack.back().state);
    }
  };

  for_each_class_state(game, [&](const ClassState& state) {
    dfs_from(state);
    return !found && !budget_hit;
  });

  if (found) return *found;
  IrcResult result{budget_hit ? IrcStatus::BudgetExceeded : IrcStatus::NoCycleExhaustive,
                   {},
                   std::nullopt,
                   static_cast<std::int64_t>(color.size())};
  return result;
}

LeafBundleTree make_leaf_bundle_tree(int y_red, int y_blue, int z_red, int z_blue,
                                     bool stubborn_leaves) {
  if (y_blue < 1 || z_red < 1) {
    throw std::invalid_argument("make_leaf_bundle_tree: the bridge needs a blue y-leaf and a red z-leaf");
  }
  constexpr TypeId kRed = 1;
  constexpr TypeId kBlue = 2;
  NodeId x = 0, y = 1, z = 2;
  int next = 3;
  NodeId x_leaf = next++;
  std::vector<std::pair<NodeId, TypeId>> leaves{{x_leaf, kBlue}};
  std::vector<Edge> edges{{x, y}, {x, x_leaf}};
  NodeId first_y_blue = -1, first_z_red = -1;
  for (int i = 0; i < y_red; ++i) {
    edges.push_back({y, next});
    leaves.push_back({next++, kRed});
  }
  for (int i = 0; i < y_blue; ++i) {
    if (first_y_blue < 0) first_y_blue = next;
    edges.push_back({y, next});
    leaves.push_back({next++, kBlue});
  }
  for (int i = 0; i < z_red; ++i) {
    if (first_z_red < 0) first_z_red = next;
    edges.push_back({z, next});
    leaves.push_back({next++, kRed});
  }
  for (int i = 0; i < z_blue; ++i) {
    edges.push_back({z, next});
    leaves.push_back({next++, kBlue});
  }
  edges.push_back({first_y_blue, first_z_red});

  std::vector<Agent> agents;
  std::map<AgentId, NodeId> placement;
  AgentId id = 0;
  AgentId rover_a = id;
  agents.push_back({id++, kRed, AgentKind::Strategic});
  AgentId rover_b = id;
  agents.push_back({id++, kRed, AgentKind::Strategic});
  for (const auto& [node, type] : leaves) {
    agents.push_back({id, type, stubborn_leaves ? AgentKind::Stubborn : AgentKind::Strategic});
    if (stubborn_leaves) placement[id] = node;
    ++id;
  }
  GameInstance game(Topology(next, std::move(edges)), 2, std::move(agents), std::move(placement));
  return LeafBundleTree{std::move(game), x, y, z, rover_a, rover_b};
}

std::optional<IrcWitness> search_tree_irc_witness(std::int64_t per_instance_budget) {
  // Leaf-bundle grid first; these shapes support hub rotations.
  for (int y_blue = 2; y_blue <= 6; ++y_blue) {
    for (int z_red = 1; z_red <= 3; ++z_red) {
      for (int z_blue = z_red + 1; z_blue <= z_red + 4; ++z_blue) {
        for (int y_red = 1; y_red <= 2; ++y_red) {
          LeafBundleTree tree = make_leaf_bundle_tree(y_red, y_blue, z_red, z_blue,
                                                      /*stubborn_leaves=*/false);
          IrcResult result = find_irc(tree.game, per_instance_budget);
          if (result.found()) return IrcWitness{std::move(tree.game), std::move(result)};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<IrcWitness> search_regular_irc_witness(std::int64_t per_instance_budget) {
  constexpr TypeId kRed = 1;
  constexpr TypeId kBlue = 2;
  for (int nodes = 8; nodes <= 11; ++nodes) {
    std::vector<Topology> graphs = connected_regular_graphs(nodes, 4);
    int agent_count = nodes - 4;
    for (const Topology& topo : graphs) {
      for (int reds = 1; reds <= agent_count / 2; ++reds) {
        std::vector<Agent> agents;
        AgentId id = 0;
        for (int i = 0; i < reds; ++i) agents.push_back({id++, kRed, AgentKind::Strategic});
        for (int i = reds; i < agent_count; ++i) agents.push_back({id++, kBlue, AgentKind::Strategic});
        GameInstance game(topo, 2, std::move(agents), {});
        IrcResult result = find_irc(game, per_instance_budget);
        if (result.found()) return IrcWitness{std::move(game), std::move(result)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace divjump
