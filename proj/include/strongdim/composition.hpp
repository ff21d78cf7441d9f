#pragma once

#include "strongdim/graph.hpp"

namespace strongdim {

class SizeTooSmallError : public GraphError {
public:
  SizeTooSmallError() : GraphError("merge parts need at least two vertices") {}
};

class NotConnectedError : public GraphError {
public:
  NotConnectedError() : GraphError("merge parts must be connected") {}
};

/// Input of the single-vertex merge composition: child graphs with their
/// attachment vertices, a parent graph, and (same-length) parent-side
/// attachment vertices. Attachment vertices may repeat on the parent side.
struct MergeInput {
  struct Child {
    Graph graph;
    std::string attach; // label of u_i inside the child
  };
  std::vector<Child> children;
  Graph parent;
  std::vector<std::string> attach; // labels of v_i inside the parent
};

/// Label of child vertex `label` of the 1-based child `index` inside the
/// merged graph. Children are made disjoint by prefixing "<index>:".
std::string merged_child_label(std::size_t index, const std::string &label);

/// Disjoint union of the children and the parent in which each child loses
/// its attachment vertex and the former neighbors are joined to the
/// parent-side vertex instead.
Graph merge(const MergeInput &in);

/// MD of the merged graph from vertex `w` (a merged-graph label), assembled
/// from per-part MD sets without any BFS on the merged graph.
/// Returns sorted merged-graph labels.
std::vector<std::string> md_composed(const MergeInput &in,
                                     const std::string &w);

/// SR of the merged graph built compositionally: per-part SR edges away from
/// the attachment vertices, a complete k-partite graph across the per-child
/// MD sets, and k complete bipartite graphs towards the parent-side MD sets.
Graph sr_edges_composed(const MergeInput &in);

} // namespace strongdim
