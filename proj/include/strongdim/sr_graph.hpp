#pragma once

#include "strongdim/graph.hpp"

namespace strongdim {

/// MD(G,w): vertices u such that no neighbor of u is farther from w than u.
/// For a single-vertex graph this is {w}; otherwise w is never a member.
/// Sorted by id. Throws DisconnectedError.
std::vector<VertexId> maximally_distant_set(const Graph &g, VertexId w);

/// Same, but computed from an already available distance vector from w.
std::vector<VertexId> maximally_distant_set(const Graph &g,
                                            const DistanceVector &from_w);

bool is_mutually_maximally_distant(const Graph &g, VertexId u, VertexId v);

/// SR(G): same vertex set, an edge {u,v} iff u and v are mutually maximally
/// distant. One BFS per vertex. Labels are preserved, ids coincide with g.
Graph strong_resolving_graph(const Graph &g);

} // namespace strongdim
