#pragma once

#include <stdexcept>

#include "divjump/game.hpp"

namespace divjump {

struct NotATreeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct StubbornPresentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct TooManyAgentsError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
// The constructed assignment failed the equilibrium post-check. This
// indicates an implementation bug; a correct run never throws it.
struct InternalVerificationError : std::logic_error {
  using std::logic_error::logic_error;
};

// Constructs an equilibrium assignment on a tree with all-strategic agents.
//
// Procedure: root the tree at the smallest-id leaf, shrink to a subtree with
// exactly |R|+1 nodes by deleting deepest (then largest-id) leaves, fill the
// subtree's odd levels bottom-up and even levels top-down with the agents
// pre-ordered by type, then repair the embedding in the full tree by the
// mixed-agent preprocessing swaps and by moving zero-utility agents of the
// designated type onto available nodes. The result always passes
// check_equilibrium; the post-check is enforced.
Assignment construct_tree_equilibrium(const GameInstance& game);

}  // namespace divjump
