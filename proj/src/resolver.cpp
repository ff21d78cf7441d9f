#include "strongdim/resolver.hpp"

#include <algorithm>
#include <cstdlib>

namespace strongdim {

bool strongly_resolves(const Graph &g, VertexId w, VertexId u, VertexId v) {
  auto d = bfs_distances(g, w).dist;
  auto duv = bfs_distances(g, u).dist;
  if (d[u] == kUnreachable || d[v] == kUnreachable)
    throw DisconnectedError();
  return d[u] == d[v] + duv[v] || d[v] == d[u] + duv[v];
}

bool is_strong_resolving_set(const Graph &g, const std::vector<VertexId> &r,
                             std::pair<VertexId, VertexId> *witness) {
  const int n = g.vertex_count();
  std::vector<char> in_r(n, 0);
  for (VertexId v : r)
    in_r[v] = 1;
  std::vector<std::vector<int>> dist(n);
  auto d = [&](VertexId s) -> const std::vector<int> & {
    if (dist[s].empty())
      dist[s] = bfs_distances(g, s).dist;
    return dist[s];
  };
  for (VertexId u = 0; u < n; ++u) {
    if (in_r[u])
      continue;
    for (VertexId v = u + 1; v < n; ++v) {
      if (in_r[v])
        continue;
      bool resolved = false;
      for (VertexId w : r)
        if (d(w)[u] == d(w)[v] + d(u)[v] || d(w)[v] == d(w)[u] + d(u)[v]) {
          resolved = true;
          break;
        }
      if (!resolved) {
        if (witness)
          *witness = {u, v};
        return false;
      }
    }
  }
  return true;
}

LandmarkDistances::LandmarkDistances(const Graph &g,
                                     std::vector<VertexId> landmarks,
                                     bool check)
    : g_(g) {
  if (check && !is_strong_resolving_set(g, landmarks))
    throw NotResolvingError();
  dist_.reserve(landmarks.size());
  for (VertexId w : landmarks)
    dist_.push_back(bfs_distances(g, w).dist);
}

int LandmarkDistances::lookup(VertexId u, VertexId v) const {
  int best = 0;
  for (const auto &d : dist_)
    best = std::max(best, std::abs(d[u] - d[v]));
  return best;
}

VertexId LandmarkDistances::next_hop(VertexId u, VertexId v) const {
  if (u == v)
    throw GraphError("next hop asked for identical endpoints");
  const int here = lookup(u, v);
  VertexId best = -1;
  for (VertexId w : g_.neighbors(u))
    if (lookup(w, v) == here - 1 &&
        (best == -1 || g_.label(w) < g_.label(best)))
      best = w;
  if (best == -1)
    throw NotResolvingError(); // cannot happen for a strong resolving set
  return best;
}

int landmark_distance(const Graph &g, const std::vector<VertexId> &r,
                      VertexId u, VertexId v) {
  return LandmarkDistances(g, r, false).lookup(u, v);
}

VertexId next_hop(const Graph &g, const std::vector<VertexId> &r, VertexId u,
                  VertexId v) {
  return LandmarkDistances(g, r, false).next_hop(u, v);
}

} // namespace strongdim
