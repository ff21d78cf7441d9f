#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace strongdim {

using VertexId = int;

/// Distance marker for vertices in another connected component.
constexpr int kUnreachable = -1;

class GraphError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class SelfLoopError : public GraphError {
public:
  explicit SelfLoopError(const std::string &label)
      : GraphError("self-loop at vertex '" + label + "'"), label_(label) {}
  const std::string &label() const { return label_; }

private:
  std::string label_;
};

class UnknownVertexError : public GraphError {
public:
  explicit UnknownVertexError(const std::string &label)
      : GraphError("unknown vertex '" + label + "'") {}
};

class DisconnectedError : public GraphError {
public:
  DisconnectedError() : GraphError("graph is not connected") {}
};

/// Undirected simple graph with stable external labels and dense internal
/// ids. Ids are assigned in first-appearance order of labels. Immutable
/// after construction by convention; all operations on const graphs are
/// pure and safe to run concurrently.
class Graph {
public:
  Graph() = default;

  static Graph
  from_edge_list(const std::vector<std::pair<std::string, std::string>> &edges);

  /// Returns the id of `label`, adding a new isolated vertex if absent.
  VertexId add_vertex(const std::string &label);

  /// Adds an undirected edge; duplicates are ignored, self-loops rejected.
  void add_edge(VertexId u, VertexId v);
  void add_edge(const std::string &u, const std::string &v);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  const std::vector<VertexId> &neighbors(VertexId u) const;
  int degree(VertexId u) const;
  bool has_edge(VertexId u, VertexId v) const;

  const std::string &label(VertexId u) const;
  std::optional<VertexId> find(const std::string &label) const;
  VertexId id_of(const std::string &label) const; // throws UnknownVertexError

  /// All edges as label pairs, each pair and the list sorted.
  std::vector<std::pair<std::string, std::string>> edge_list() const;

  /// Ids of all vertices, sorted by label.
  std::vector<VertexId> vertices_by_label() const;

private:
  void check(VertexId u) const;

  std::vector<std::vector<VertexId>> adjacency_; // sorted neighbor lists
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
  std::size_t edge_count_ = 0;
};

struct DistanceVector {
  VertexId source = 0;
  std::vector<int> dist; // hop count, kUnreachable for other components
};

DistanceVector bfs_distances(const Graph &g, VertexId source);

/// True iff one BFS from any vertex reaches all. Empty graph counts as
/// connected.
bool is_connected(const Graph &g);

/// Copy of `g` without the vertices of `removed` and their incident edges.
/// Labels are preserved; internal ids are reassigned.
Graph remove_vertices(const Graph &g, const std::vector<VertexId> &removed);

/// Sorted labels for a set of vertex ids.
std::vector<std::string> labels_of(const Graph &g,
                                   const std::vector<VertexId> &ids);

} // namespace strongdim
