#pragma once

#include "strongdim/graph.hpp"

#include <array>

namespace strongdim {

class NotACographError : public GraphError {
public:
  explicit NotACographError(std::array<VertexId, 4> p4)
      : GraphError("graph is not a co-graph"), witness_(p4) {}
  /// An induced path a-b-c-d proving the graph is not a co-graph.
  const std::array<VertexId, 4> &witness() const { return witness_; }

private:
  std::array<VertexId, 4> witness_;
};

/// Canonical co-tree. Successors of a union node are join nodes or leaves
/// and vice versa. The same structure also represents the co-tree of the
/// strong resolving graph, where twin-join nodes group leaves that are true
/// twins in the original graph.
struct CoTree {
  enum class Kind { Union, Join, TwinJoin, Leaf };
  struct Node {
    Kind kind;
    std::vector<int> children;
    int parent = -1;
    VertexId vertex = -1; // leaves only: vertex of the underlying graph
    long long n = 0;      // surviving leaves in the subtree (excluded -> 0)
    long long vc = -1;    // -1 means undefined
    long long m = -1;     // -1 means undefined
  };
  std::vector<Node> nodes;
  int root = -1;
  std::vector<int> leaf_of; // vertex id -> leaf node index

  /// Parent of a node in the co-tree of the original graph: twin-join
  /// nodes are skipped since they only exist on the SR side.
  int parent_in_g(int node) const {
    int p = nodes[node].parent;
    if (p != -1 && nodes[p].kind == Kind::TwinJoin)
      p = nodes[p].parent;
    return p;
  }
};

/// Canonical co-tree for g via recursive complement-component splitting.
/// Throws NotACographError with an induced-P4 witness otherwise.
CoTree build_cotree(const Graph &g);

/// Co-tree of SR(G) from the co-tree of connected G: union and join swap,
/// and for every new union node with two or more leaf children those leaves
/// move under a fresh twin-join node. Node ids of tg are preserved;
/// twin-join nodes are appended. Single-child chains are kept as is.
CoTree sr_cotree(const CoTree &tg);

/// Zeroes the n-value of the leaves for `excluded` and recomputes subtree
/// counts. Realizes the deletion of those vertices for the cover
/// computations below.
void set_excluded(CoTree &t, const std::vector<VertexId> &excluded);

/// Bottom-up minimum vertex cover sizes: leaves 0, union nodes sum their
/// children, join and twin-join nodes take min_i(n - n_i + vc_i).
/// vc(root) is |MVC| of the realized graph under the n-zeroing convention.
void alg1_vc(CoTree &tsr);

/// |XVC(SR(G) \ W, MD(G,w) \ W)| by climbing from w's predecessor towards
/// the root, adding sibling n-sums at join nodes and sibling vc-sums at
/// union nodes of tsr. Requires alg1_vc. Returns 0 when node(w) is the
/// root.
long long alg2_xvc(const CoTree &tg, const CoTree &tsr, VertexId w);

/// Top-down increments m: m(root) = 0, every other inner node of the
/// original co-tree adds its sibling n-sums (join parent) or vc-sums
/// (union parent). After this, alg2's value for a leaf w with predecessor
/// u is n(u) - n(w) + m(u) in constant time.
void alg3_increments(CoTree &tsr);

/// Constant-time query after alg1_vc + alg3_increments.
long long xvc_query(const CoTree &tsr, VertexId w);

/// Witness extraction; covers are sorted vertex ids of the underlying graph.
std::vector<VertexId> vc_witness(const CoTree &tsr);
std::vector<VertexId> xvc_witness(const CoTree &tsr, VertexId w);

/// Realizes the graph a co-tree stands for; vertex labels are taken from
/// `label_of`, indexed by the leaves' vertex ids. Excluded leaves (n = 0)
/// are skipped.
Graph cotree_to_graph(const CoTree &t,
                      const std::vector<std::string> &label_of);

} // namespace strongdim
