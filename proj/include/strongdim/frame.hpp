#pragma once

#include "strongdim/decomposition.hpp"
#include "strongdim/solvers.hpp"

#include <memory>

namespace strongdim {

/// Result of the bottom-up solve over the decomposition tree.
struct SolveSummary {
  std::size_t dimension = 0;
  std::vector<std::string> resolving_set; // sorted labels
  struct ComponentTrace {
    ComponentClass cls;
    std::size_t component_mvc = 0; // |MVC(SR(H) \ W)| of that component
    int chosen_j = 0;              // winning candidate index, 0 = keep MVC
  };
  std::vector<ComponentTrace> trace; // post-order over the b-nodes
};

/// Exact strong metric dimension plus one minimum strong resolving set.
/// Per b-node, the component covers (without the incident separation
/// vertices) are combined with the children's subtree answers; among the
/// candidate unions U_0..U_k the smallest wins, ties going to the smallest
/// index. Throws DisconnectedError; solver errors bubble up.
SolveSummary solve(const Graph &g,
                   const SolverRegistry &registry = default_registry());

} // namespace strongdim
