#include "divjump/gadget.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace divjump {

Gadget build_gadget(int h_vertex_count, const std::vector<Edge>& h_edges, int s) {
  if (h_vertex_count <= 0) throw std::invalid_argument("build_gadget: H must have vertices");
  if (s < 1) throw std::invalid_argument("build_gadget: s must be at least 1");
  for (const auto& [u, v] : h_edges) {
    if (u < 0 || v < 0 || u >= h_vertex_count || v >= h_vertex_count || u == v) {
      throw std::invalid_argument("build_gadget: malformed H edge");
    }
  }

  // Node layout: H's vertices, then W, then x, y, z, then the stubborn
  // neighborhoods of x (1 blue), y (1 red + 5 blue) and z (3 red + 4 blue).
  int w_size = 7 * s + 1;
  std::vector<Edge> edges(h_edges);
  std::vector<NodeId> h_nodes, w_nodes;

  int next = 0;
  for (int i = 0; i < h_vertex_count; ++i) h_nodes.push_back(next++);
  for (int i = 0; i < w_size; ++i) w_nodes.push_back(next++);
  NodeId x = next++;
  NodeId y = next++;
  NodeId z = next++;
  std::vector<NodeId> x_pad, y_pad, z_pad;
  x_pad.push_back(next++);
  for (int i = 0; i < 6; ++i) y_pad.push_back(next++);
  for (int i = 0; i < 7; ++i) z_pad.push_back(next++);
  int node_count = next;

  for (NodeId h : h_nodes) {
    for (NodeId w : w_nodes) edges.push_back({h, w});
  }
  edges.push_back({x, y});
  edges.push_back({x, x_pad[0]});
  for (NodeId p : y_pad) edges.push_back({y, p});
  for (NodeId p : z_pad) edges.push_back({z, p});

  std::vector<Agent> agents;
  std::map<AgentId, NodeId> placement;
  std::vector<AgentId> strategic_agents;
  AgentId id = 0;
  for (int i = 0; i <= s; ++i) {
    agents.push_back({id, Gadget::kRed, AgentKind::Strategic});
    strategic_agents.push_back(id);
    ++id;
  }
  auto stubborn = [&](TypeId type, NodeId node) {
    agents.push_back({id, type, AgentKind::Stubborn});
    placement[id] = node;
    ++id;
  };
  // W: 5s+1 blue then 2s red, in node order.
  for (int i = 0; i < w_size; ++i) {
    stubborn(i < 5 * s + 1 ? Gadget::kBlue : Gadget::kRed, w_nodes[i]);
  }
  stubborn(Gadget::kBlue, x_pad[0]);
  stubborn(Gadget::kRed, y_pad[0]);
  for (int i = 1; i < 6; ++i) stubborn(Gadget::kBlue, y_pad[i]);
  for (int i = 0; i < 3; ++i) stubborn(Gadget::kRed, z_pad[i]);
  for (int i = 3; i < 7; ++i) stubborn(Gadget::kBlue, z_pad[i]);

  // Bridge between the smallest-id stubborn-occupied nodes of G1 and G2.
  edges.push_back({w_nodes.front(), x_pad[0]});

  GameInstance game(Topology(node_count, std::move(edges)), 2, std::move(agents),
                    std::move(placement));
  return Gadget{std::move(game), std::move(h_nodes), std::move(w_nodes), x, y, z,
                std::move(strategic_agents)};
}

Assignment gadget_independent_set_assignment(const Gadget& gadget,
                                             const std::vector<int>& h_vertices) {
  int s = static_cast<int>(gadget.strategic_agents.size()) - 1;
  if (static_cast<int>(h_vertices.size()) != s) {
    throw std::invalid_argument("gadget assignment: expected an independent set of size " +
                                std::to_string(s));
  }
  std::set<NodeId> chosen;
  for (int v : h_vertices) {
    if (v < 0 || v >= static_cast<int>(gadget.h_nodes.size())) {
      throw std::invalid_argument("gadget assignment: H vertex out of range");
    }
    chosen.insert(gadget.h_nodes[v]);
  }
  if (static_cast<int>(chosen.size()) != s) {
    throw std::invalid_argument("gadget assignment: repeated H vertex");
  }
  for (NodeId u : chosen) {
    for (NodeId v : chosen) {
      if (u < v && gadget.game.topology().has_edge(u, v)) {
        throw std::invalid_argument("gadget assignment: vertex set is not independent");
      }
    }
  }
  std::map<AgentId, NodeId> placement = gadget.game.stubborn_placement();
  auto it = chosen.begin();
  for (int i = 0; i < s; ++i) placement[gadget.strategic_agents[i]] = *it++;
  placement[gadget.strategic_agents[s]] = gadget.x;
  return Assignment(gadget.game, placement);
}

}  // namespace divjump
