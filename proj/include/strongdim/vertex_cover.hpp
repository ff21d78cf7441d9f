#pragma once

#include "strongdim/graph.hpp"

namespace strongdim {

class BudgetExceededError : public GraphError {
public:
  explicit BudgetExceededError(long long budget)
      : GraphError("vertex cover search exceeded budget of " +
                   std::to_string(budget) + " nodes") {}
};

struct CoverResult {
  std::vector<VertexId> vertices; // sorted by id
  std::size_t size = 0;           // == vertices.size()
};

/// Default search-node budget: 10^7, overridable through the
/// STRONGDIM_VC_BUDGET environment variable (read once).
long long default_vc_budget();

struct VcOptions {
  long long budget = default_vc_budget(); // search-node limit
};

/// Exact minimum vertex cover by branch and bound: degree-0/1 reductions,
/// maximal-matching lower bound, branching on a maximum-degree vertex with
/// ties broken by smallest label. Disconnected and edgeless inputs are fine.
CoverResult min_vertex_cover(const Graph &g, const VcOptions &opts = {});

/// Minimum cover that contains all of M: M plus a minimum cover of the
/// graph with M and its incident edges removed.
CoverResult min_vertex_cover_containing(const Graph &g,
                                        const std::vector<VertexId> &forced,
                                        const VcOptions &opts = {});

/// True iff `cover` covers every edge of g.
bool is_vertex_cover(const Graph &g, const std::vector<VertexId> &cover);

} // namespace strongdim
