#include "strongdim/sr_graph.hpp"

#include <algorithm>

namespace strongdim {

std::vector<VertexId> maximally_distant_set(const Graph &g,
                                            const DistanceVector &from_w) {
  const auto &d = from_w.dist;
  std::vector<VertexId> out;
  if (g.vertex_count() == 1) {
    out.push_back(from_w.source);
    return out;
  }
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    if (d[u] == kUnreachable)
      throw DisconnectedError();
    bool maximal = true;
    for (VertexId v : g.neighbors(u))
      if (d[v] > d[u]) {
        maximal = false;
        break;
      }
    if (maximal && u != from_w.source)
      out.push_back(u);
  }
  return out;
}

std::vector<VertexId> maximally_distant_set(const Graph &g, VertexId w) {
  return maximally_distant_set(g, bfs_distances(g, w));
}

bool is_mutually_maximally_distant(const Graph &g, VertexId u, VertexId v) {
  auto mdu = maximally_distant_set(g, u);
  if (!std::binary_search(mdu.begin(), mdu.end(), v))
    return false;
  auto mdv = maximally_distant_set(g, v);
  return std::binary_search(mdv.begin(), mdv.end(), u);
}

Graph strong_resolving_graph(const Graph &g) {
  Graph sr;
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    sr.add_vertex(g.label(u));
  if (g.vertex_count() <= 1)
    return sr;
  std::vector<std::vector<char>> md(g.vertex_count());
  for (VertexId w = 0; w < g.vertex_count(); ++w) {
    md[w].assign(g.vertex_count(), 0);
    for (VertexId u : maximally_distant_set(g, w))
      md[w][u] = 1;
  }
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    for (VertexId v = u + 1; v < g.vertex_count(); ++v)
      if (md[u][v] && md[v][u])
        sr.add_edge(u, v);
  return sr;
}

} // namespace strongdim
