#pragma once

#include "strongdim/graph.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace testutil {

inline strongdim::Graph
from_pairs(std::initializer_list<std::pair<const char *, const char *>> edges) {
  strongdim::Graph g;
  for (const auto &[a, b] : edges)
    g.add_edge(std::string(a), std::string(b));
  return g;
}

/// The 7-vertex running example: dimension 3, {a,b,g} minimum.
inline strongdim::Graph example_graph() {
  return from_pairs({{"a", "b"},
                     {"a", "e"},
                     {"b", "c"},
                     {"b", "f"},
                     {"c", "e"},
                     {"c", "f"},
                     {"d", "e"},
                     {"d", "f"},
                     {"d", "g"},
                     {"e", "f"}});
}

/// Minimum vertex cover size by subset enumeration; independent of the
/// branch-and-bound implementation. Only for graphs with <= 20 vertices.
inline std::size_t exhaustive_mvc(const strongdim::Graph &g,
                                  std::uint32_t forced_mask = 0) {
  const int n = g.vertex_count();
  std::size_t best = static_cast<std::size_t>(n) + 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if ((mask & forced_mask) != forced_mask)
      continue;
    bool covers = true;
    for (strongdim::VertexId u = 0; u < n && covers; ++u)
      for (strongdim::VertexId v : g.neighbors(u))
        if (u < v && !((mask >> u) & 1) && !((mask >> v) & 1)) {
          covers = false;
          break;
        }
    if (covers)
      best = std::min(best, static_cast<std::size_t>(__builtin_popcount(mask)));
  }
  return best;
}

inline std::uint32_t mask_of(const std::vector<strongdim::VertexId> &ids) {
  std::uint32_t mask = 0;
  for (strongdim::VertexId v : ids)
    mask |= 1u << v;
  return mask;
}

} // namespace testutil
