// Regenerates the pinned data files from their documented searches:
//   data/pos_fixture.json       7-node price-of-stability instance
//   data/tree_irc_witness.json  stubborn-leaf tree whose dynamics never settle
// Run from the repository root. The searches are deterministic, so the output
// is byte-stable.

#include <iostream>

#include "divjump/fixture_search.hpp"
#include "divjump/generators.hpp"
#include "divjump/io.hpp"
#include "divjump/irc.hpp"
#include "divjump/oracle.hpp"

int main() {
  using namespace divjump;

  auto topo = find_pos_fixture_topology();
  if (!topo) {
    std::cerr << "pos fixture search failed\n";
    return 1;
  }
  GameInstance pos_game = make_pos_game(*topo);
  OracleReport report = brute_force(pos_game, 1000);
  std::cout << "pos fixture: opt " << report.opt_welfare << ", max_eq "
            << report.max_eq_welfare->str() << ", pos " << report.pos->str() << "\n";
  write_game_file("data/pos_fixture.json", pos_game);

  LeafBundleTree tree = make_leaf_bundle_tree(1, 5, 3, 4, /*stubborn_leaves=*/true);
  IrcResult irc = find_irc(tree.game, 1000);
  if (!irc.found()) {
    std::cerr << "tree irc witness search failed\n";
    return 1;
  }
  std::cout << "tree irc witness: cycle of length " << irc.cycle.size() << " over "
            << irc.states_visited << " states\n";
  write_game_file("data/tree_irc_witness.json", tree.game);
  return 0;
}
