#include "strongdim/graph.hpp"

#include <algorithm>
#include <deque>

namespace strongdim {

Graph Graph::from_edge_list(
    const std::vector<std::pair<std::string, std::string>> &edges) {
  Graph g;
  for (const auto &[a, b] : edges) {
    if (a == b)
      throw SelfLoopError(a);
    VertexId u = g.add_vertex(a);
    VertexId v = g.add_vertex(b);
    g.add_edge(u, v);
  }
  return g;
}

VertexId Graph::add_vertex(const std::string &label) {
  auto it = index_.find(label);
  if (it != index_.end())
    return it->second;
  VertexId id = vertex_count();
  index_.emplace(label, id);
  labels_.push_back(label);
  adjacency_.emplace_back();
  return id;
}

void Graph::add_edge(VertexId u, VertexId v) {
  check(u);
  check(v);
  if (u == v)
    throw SelfLoopError(labels_[u]);
  auto &nu = adjacency_[u];
  auto pos = std::lower_bound(nu.begin(), nu.end(), v);
  if (pos != nu.end() && *pos == v)
    return; // duplicate
  nu.insert(pos, v);
  auto &nv = adjacency_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
}

void Graph::add_edge(const std::string &u, const std::string &v) {
  if (u == v)
    throw SelfLoopError(u);
  add_edge(add_vertex(u), add_vertex(v));
}

const std::vector<VertexId> &Graph::neighbors(VertexId u) const {
  check(u);
  return adjacency_[u];
}

int Graph::degree(VertexId u) const {
  check(u);
  return static_cast<int>(adjacency_[u].size());
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  check(u);
  check(v);
  const auto &nu = adjacency_[u];
  return std::binary_search(nu.begin(), nu.end(), v);
}

const std::string &Graph::label(VertexId u) const {
  check(u);
  return labels_[u];
}

std::optional<VertexId> Graph::find(const std::string &label) const {
  auto it = index_.find(label);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

VertexId Graph::id_of(const std::string &label) const {
  auto it = index_.find(label);
  if (it == index_.end())
    throw UnknownVertexError(label);
  return it->second;
}

std::vector<std::pair<std::string, std::string>> Graph::edge_list() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < vertex_count(); ++u)
    for (VertexId v : adjacency_[u])
      if (u < v) {
        const std::string &a = labels_[u];
        const std::string &b = labels_[v];
        out.emplace_back(std::min(a, b), std::max(a, b));
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> Graph::vertices_by_label() const {
  std::vector<VertexId> ids(vertex_count());
  for (VertexId u = 0; u < vertex_count(); ++u)
    ids[u] = u;
  std::sort(ids.begin(), ids.end(), [this](VertexId a, VertexId b) {
    return labels_[a] < labels_[b];
  });
  return ids;
}

void Graph::check(VertexId u) const {
  if (u < 0 || u >= vertex_count())
    throw UnknownVertexError("#" + std::to_string(u));
}

DistanceVector bfs_distances(const Graph &g, VertexId source) {
  if (source < 0 || source >= g.vertex_count())
    throw UnknownVertexError("#" + std::to_string(source));
  DistanceVector dv;
  dv.source = source;
  dv.dist.assign(g.vertex_count(), kUnreachable);
  dv.dist[source] = 0;
  std::deque<VertexId> queue{source};
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (VertexId v : g.neighbors(u))
      if (dv.dist[v] == kUnreachable) {
        dv.dist[v] = dv.dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dv;
}

bool is_connected(const Graph &g) {
  if (g.vertex_count() == 0)
    return true;
  DistanceVector dv = bfs_distances(g, 0);
  return std::find(dv.dist.begin(), dv.dist.end(), kUnreachable) ==
         dv.dist.end();
}

Graph remove_vertices(const Graph &g, const std::vector<VertexId> &removed) {
  std::vector<char> drop(g.vertex_count(), 0);
  for (VertexId u : removed) {
    if (u < 0 || u >= g.vertex_count())
      throw UnknownVertexError("#" + std::to_string(u));
    drop[u] = 1;
  }
  Graph out;
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    if (!drop[u])
      out.add_vertex(g.label(u));
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    if (drop[u])
      continue;
    for (VertexId v : g.neighbors(u))
      if (u < v && !drop[v])
        out.add_edge(out.id_of(g.label(u)), out.id_of(g.label(v)));
  }
  return out;
}

std::vector<std::string> labels_of(const Graph &g,
                                   const std::vector<VertexId> &ids) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (VertexId u : ids)
    out.push_back(g.label(u));
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace strongdim
