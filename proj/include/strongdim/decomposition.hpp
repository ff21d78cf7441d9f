#pragma once

#include "strongdim/graph.hpp"

namespace strongdim {

struct BiconnectedComponents {
  struct Component {
    std::vector<VertexId> vertices;                  // sorted global ids
    std::vector<std::pair<VertexId, VertexId>> edges; // global ids, u < v
  };
  std::vector<Component> components;
  std::vector<VertexId> separation_vertices; // sorted global ids
};

/// Maximal biconnected components via one iterative depth-first traversal.
/// Bridges come out as 2-vertex components. Requires a connected graph with
/// at least one edge.
BiconnectedComponents biconnected_components(const Graph &g);

/// Rooted block-cut tree: one b-node per biconnected component, one s-node
/// per separation vertex, an edge where the separation vertex lies in the
/// component. The root is the b-node containing the lexicographically
/// smallest label, ties broken by smallest component size.
struct DecompositionTree {
  struct BNode {
    Graph component;                 // induced subgraph, global labels kept
    std::vector<VertexId> to_global; // local id -> global id
    std::vector<int> s_adjacent;     // incident s-node indices
    std::vector<int> s_children;     // filled by rooting
    int parent_s = -1;
  };
  struct SNode {
    VertexId vertex; // global id of the separation vertex
    std::vector<int> b_adjacent;
    std::vector<int> b_children;
    int parent_b = -1;
  };
  std::vector<BNode> b_nodes;
  std::vector<SNode> s_nodes;
  int root = -1;

  /// b-node indices in post-order of the rooted tree (children first).
  std::vector<int> post_order() const;
};

DecompositionTree build_decomposition_tree(const Graph &g);

} // namespace strongdim
