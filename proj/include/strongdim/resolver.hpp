#pragma once

#include "strongdim/graph.hpp"

#include <optional>

namespace strongdim {

class NotResolvingError : public GraphError {
public:
  NotResolvingError() : GraphError("set is not strongly resolving") {}
};

/// True iff some shortest w-u path contains v or some shortest w-v path
/// contains u.
bool strongly_resolves(const Graph &g, VertexId w, VertexId u, VertexId v);

/// Checks that every vertex pair outside R is strongly resolved by some
/// member of R; `witness`, if given, receives a failing pair.
bool is_strong_resolving_set(const Graph &g, const std::vector<VertexId> &r,
                             std::pair<VertexId, VertexId> *witness = nullptr);

/// Distances recovered from landmark coordinates only: one BFS per landmark,
/// cached. When R is strongly resolving, lookup(u, v) equals d(u, v).
class LandmarkDistances {
public:
  /// With `check` set, throws NotResolvingError unless R strongly resolves g.
  LandmarkDistances(const Graph &g, std::vector<VertexId> landmarks,
                    bool check = true);

  /// max over landmarks w of |d(u,w) - d(v,w)|.
  int lookup(VertexId u, VertexId v) const;

  /// Neighbor u' of u with lookup(u', v) = lookup(u, v) - 1, smallest label
  /// first. Requires u != v.
  VertexId next_hop(VertexId u, VertexId v) const;

private:
  const Graph &g_;
  std::vector<std::vector<int>> dist_; // one vector per landmark
};

int landmark_distance(const Graph &g, const std::vector<VertexId> &r,
                      VertexId u, VertexId v);
VertexId next_hop(const Graph &g, const std::vector<VertexId> &r, VertexId u,
                  VertexId v);

} // namespace strongdim
