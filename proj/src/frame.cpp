#include "strongdim/frame.hpp"

#include <algorithm>
#include <limits>

namespace strongdim {

namespace {

/// Covers flow upward as shared chunks instead of copies, keeping the
/// total memory linear: a chunk owns the vertices contributed by one
/// component and points at the chunks of the chosen child covers.
struct SetChunk {
  std::vector<VertexId> own; // global ids
  std::vector<std::shared_ptr<const SetChunk>> parts;
};
using ChunkPtr = std::shared_ptr<const SetChunk>;

std::size_t flatten(const ChunkPtr &chunk, std::vector<VertexId> &out) {
  if (!chunk)
    return 0;
  std::size_t total = chunk->own.size();
  out.insert(out.end(), chunk->own.begin(), chunk->own.end());
  for (const ChunkPtr &part : chunk->parts)
    total += flatten(part, out);
  return total;
}

struct SubtreeAnswer {
  std::size_t mvc_size = 0;
  ChunkPtr mvc_set;
  std::size_t xvc_size = 0;
  ChunkPtr xvc_set;
};

} // namespace

SolveSummary solve(const Graph &g, const SolverRegistry &registry) {
  if (!is_connected(g))
    throw DisconnectedError();
  SolveSummary out;
  if (g.vertex_count() <= 1)
    return out; // no vertex pairs to resolve

  DecompositionTree tree = build_decomposition_tree(g);
  std::vector<SubtreeAnswer> answers(tree.b_nodes.size());

  for (int bi : tree.post_order()) {
    const auto &bn = tree.b_nodes[bi];
    const Graph &h = bn.component;
    auto local_of_global = [&](VertexId global) {
      return h.id_of(g.label(global));
    };

    // child pairs: one per b-grandchild, repeating the separation vertex
    // when several subtrees hang off it
    struct ChildRef {
      VertexId sep_local;
      int child_b;
    };
    std::vector<ChildRef> children;
    ComponentQuery query;
    for (int si : bn.s_children) {
      VertexId sep_local = local_of_global(tree.s_nodes[si].vertex);
      query.excluded.push_back(sep_local);
      for (int cb : tree.s_nodes[si].b_children)
        children.push_back({sep_local, cb});
    }
    const bool has_parent = bn.parent_s != -1;
    VertexId up_local = -1;
    if (has_parent) {
      up_local = local_of_global(tree.s_nodes[bn.parent_s].vertex);
      query.excluded.push_back(up_local);
    }
    for (const ChildRef &c : children)
      query.md_queries.push_back(c.sep_local);
    if (has_parent)
      query.md_queries.push_back(up_local);
    std::sort(query.excluded.begin(), query.excluded.end());
    query.excluded.erase(
        std::unique(query.excluded.begin(), query.excluded.end()),
        query.excluded.end());
    std::sort(query.md_queries.begin(), query.md_queries.end());
    query.md_queries.erase(
        std::unique(query.md_queries.begin(), query.md_queries.end()),
        query.md_queries.end());

    ComponentClass cls{};
    ComponentAnswer ca = solve_component(h, query, registry, &cls);

    auto chunk_of = [&](const CoverResult &cover,
                        const std::vector<ChunkPtr> &parts) {
      auto chunk = std::make_shared<SetChunk>();
      chunk->own.reserve(cover.vertices.size());
      for (VertexId local : cover.vertices)
        chunk->own.push_back(bn.to_global[local]);
      chunk->parts = parts;
      return ChunkPtr(chunk);
    };

    // candidate sizes |U_0| .. |U_k|; the winner's sets are materialized
    std::size_t sum_child_xvc = 0;
    for (const ChildRef &c : children)
      sum_child_xvc += answers[c.child_b].xvc_size;
    std::size_t best_size = ca.mvc.size + sum_child_xvc;
    int best_j = 0;
    for (std::size_t j = 0; j < children.size(); ++j) {
      const SubtreeAnswer &child = answers[children[j].child_b];
      std::size_t size = ca.xvc.at(children[j].sep_local).size +
                         sum_child_xvc - child.xvc_size + child.mvc_size;
      if (size < best_size) {
        best_size = size;
        best_j = static_cast<int>(j) + 1;
      }
    }

    SubtreeAnswer &mine = answers[bi];
    {
      std::vector<ChunkPtr> parts;
      for (std::size_t j = 0; j < children.size(); ++j) {
        const SubtreeAnswer &child = answers[children[j].child_b];
        parts.push_back(best_j == static_cast<int>(j) + 1 ? child.mvc_set
                                                          : child.xvc_set);
      }
      const CoverResult &comp_cover =
          best_j == 0 ? ca.mvc : ca.xvc.at(children[best_j - 1].sep_local);
      mine.mvc_size = best_size;
      mine.mvc_set = chunk_of(comp_cover, parts);
    }
    if (has_parent) {
      std::vector<ChunkPtr> parts;
      for (const ChildRef &c : children)
        parts.push_back(answers[c.child_b].xvc_set);
      const CoverResult &comp_cover = ca.xvc.at(up_local);
      mine.xvc_size = comp_cover.size + sum_child_xvc;
      mine.xvc_set = chunk_of(comp_cover, parts);
    }

    out.trace.push_back({cls, ca.mvc.size, best_j});
  }

  const SubtreeAnswer &root = answers[tree.root];
  std::vector<VertexId> ids;
  out.dimension = flatten(root.mvc_set, ids);
  if (out.dimension != root.mvc_size || out.dimension != ids.size())
    throw GraphError("inconsistent cover assembly at the root");
  out.resolving_set = labels_of(g, ids);
  return out;
}

} // namespace strongdim
