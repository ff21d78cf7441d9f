#pragma once

#include "strongdim/composition.hpp"
#include "strongdim/graph.hpp"

#include <cstdint>
#include <random>

namespace strongdim {

/// Cycle x0-x1-...-x{n-1}-x0, n >= 3.
Graph make_cycle(int n);

/// Path p1-...-pn.
Graph make_path(int n);

/// Clique q1..qn.
Graph make_clique(int n);

/// n x m grid with vertices r<i>c<j>, 1 <= i <= n, 1 <= j <= m.
Graph make_grid(int n, int m);

/// Connected graph on v1..vn: random spanning tree plus random extra edges.
Graph random_connected_graph(int n, std::mt19937_64 &rng);

/// Connected co-graph on v1..vn realized from a random co-tree with a join
/// root.
Graph random_cograph(int n, std::mt19937_64 &rng);

struct ComponentSpec {
  enum class Kind { Cycle, Grid, Cograph, Random };
  Kind kind;
  int n = 0;
  int m = 0; // grids only
};

/// Parses "cycle:7", "grid:3x4", "cograph:8", "random:6".
/// Throws GraphError on malformed specs.
ComponentSpec parse_component_spec(const std::string &text);

/// A composed instance together with ground-truth generation metadata.
struct GeneratedInstance {
  Graph graph;
  struct Part {
    std::string cls;     // "cycle" | "grid" | "cograph" | "random"
    std::string attach;  // label shared with the earlier parts ("" for part 0)
    std::vector<std::string> vertices; // labels inside the composed graph
  };
  std::vector<Part> parts;
};

/// Glues one component per spec into a connected graph: part k keeps its own
/// labels prefixed "c<k>.", except the attachment vertex which reuses a
/// uniformly drawn label of the graph built so far. Deterministic per seed.
GeneratedInstance compose_components(const std::vector<ComponentSpec> &specs,
                                     std::uint64_t seed);

/// Random merge tuple for cross-checking the compositional SR construction:
/// parent and k <= max_children children drawn from cycles, paths, cliques
/// and random connected graphs of max_part vertices each.
MergeInput random_merge_input(std::mt19937_64 &rng, int max_children = 5,
                              int max_part = 10);

} // namespace strongdim
