#include "strongdim/decomposition.hpp"

#include <algorithm>
#include <deque>

namespace strongdim {

BiconnectedComponents biconnected_components(const Graph &g) {
  if (!is_connected(g))
    throw DisconnectedError();
  const int n = g.vertex_count();

  BiconnectedComponents out;
  if (n == 0 || g.edge_count() == 0)
    return out;

  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<char> articulation(n, 0);
  std::vector<std::pair<VertexId, VertexId>> edge_stack;
  int timer = 0;

  struct Frame {
    VertexId u;
    std::size_t next; // index into neighbors(u)
  };
  std::vector<Frame> stack;

  auto emit_component = [&](VertexId u, VertexId v) {
    BiconnectedComponents::Component comp;
    while (true) {
      auto e = edge_stack.back();
      edge_stack.pop_back();
      comp.edges.emplace_back(std::min(e.first, e.second),
                              std::max(e.first, e.second));
      if ((e.first == u && e.second == v) ||
          (e.first == v && e.second == u))
        break;
    }
    std::vector<VertexId> vs;
    for (auto &[a, b] : comp.edges) {
      vs.push_back(a);
      vs.push_back(b);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    comp.vertices = std::move(vs);
    std::sort(comp.edges.begin(), comp.edges.end());
    out.components.push_back(std::move(comp));
  };

  const VertexId root = 0;
  int root_children = 0;
  disc[root] = low[root] = timer++;
  stack.push_back({root, 0});

  while (!stack.empty()) {
    Frame &fr = stack.back();
    VertexId u = fr.u;
    const auto &nbrs = g.neighbors(u);
    if (fr.next < nbrs.size()) {
      VertexId v = nbrs[fr.next++];
      if (v == parent[u])
        continue;
      if (disc[v] == -1) {
        parent[v] = u;
        if (u == root)
          ++root_children;
        disc[v] = low[v] = timer++;
        edge_stack.emplace_back(u, v);
        stack.push_back({v, 0});
      } else if (disc[v] < disc[u]) {
        edge_stack.emplace_back(u, v);
        low[u] = std::min(low[u], disc[v]);
      }
    } else {
      stack.pop_back();
      if (!stack.empty()) {
        VertexId p = stack.back().u;
        low[p] = std::min(low[p], low[u]);
        if (low[u] >= disc[p]) {
          if (p != root)
            articulation[p] = 1;
          emit_component(p, u);
        }
      }
    }
  }
  if (root_children >= 2)
    articulation[root] = 1;

  for (VertexId u = 0; u < n; ++u)
    if (articulation[u])
      out.separation_vertices.push_back(u);
  return out;
}

DecompositionTree build_decomposition_tree(const Graph &g) {
  BiconnectedComponents bc = biconnected_components(g);

  DecompositionTree t;
  std::vector<int> snode_of(g.vertex_count(), -1);
  for (VertexId v : bc.separation_vertices) {
    snode_of[v] = static_cast<int>(t.s_nodes.size());
    t.s_nodes.push_back({v, {}, {}, -1});
  }

  for (auto &comp : bc.components) {
    DecompositionTree::BNode b;
    // local ids assigned in label order for determinism
    std::vector<VertexId> by_label = comp.vertices;
    std::sort(by_label.begin(), by_label.end(),
              [&](VertexId a, VertexId c) { return g.label(a) < g.label(c); });
    for (VertexId v : by_label) {
      b.component.add_vertex(g.label(v));
      b.to_global.push_back(v);
    }
    for (auto &[u, v] : comp.edges)
      b.component.add_edge(b.component.id_of(g.label(u)),
                           b.component.id_of(g.label(v)));
    int bi = static_cast<int>(t.b_nodes.size());
    for (VertexId v : comp.vertices)
      if (snode_of[v] != -1) {
        b.s_adjacent.push_back(snode_of[v]);
        t.s_nodes[snode_of[v]].b_adjacent.push_back(bi);
      }
    t.b_nodes.push_back(std::move(b));
  }

  // root: b-node containing the lexicographically smallest label, ties by
  // smallest component size
  int best = 0;
  auto smallest_label = [&](int bi) -> const std::string & {
    const Graph &c = t.b_nodes[bi].component;
    return c.label(c.vertices_by_label().front());
  };
  for (int bi = 1; bi < static_cast<int>(t.b_nodes.size()); ++bi) {
    const std::string &a = smallest_label(bi);
    const std::string &b = smallest_label(best);
    if (a < b || (a == b && t.b_nodes[bi].component.vertex_count() <
                                t.b_nodes[best].component.vertex_count()))
      best = bi;
  }
  t.root = best;

  // orient by BFS from the root, alternating b- and s-nodes
  std::deque<std::pair<char, int>> queue{{'b', t.root}};
  std::vector<char> seen_b(t.b_nodes.size(), 0), seen_s(t.s_nodes.size(), 0);
  seen_b[t.root] = 1;
  while (!queue.empty()) {
    auto [kind, idx] = queue.front();
    queue.pop_front();
    if (kind == 'b') {
      for (int si : t.b_nodes[idx].s_adjacent)
        if (!seen_s[si]) {
          seen_s[si] = 1;
          t.b_nodes[idx].s_children.push_back(si);
          t.s_nodes[si].parent_b = idx;
          queue.emplace_back('s', si);
        }
    } else {
      for (int bi : t.s_nodes[idx].b_adjacent)
        if (!seen_b[bi]) {
          seen_b[bi] = 1;
          t.s_nodes[idx].b_children.push_back(bi);
          t.b_nodes[bi].parent_s = idx;
          queue.emplace_back('b', bi);
        }
    }
  }
  return t;
}

std::vector<int> DecompositionTree::post_order() const {
  std::vector<int> order;
  if (root < 0)
    return order;
  std::vector<std::pair<int, bool>> stack{{root, false}};
  while (!stack.empty()) {
    auto [bi, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      order.push_back(bi);
      continue;
    }
    stack.emplace_back(bi, true);
    for (int si : b_nodes[bi].s_children)
      for (int ci : s_nodes[si].b_children)
        stack.emplace_back(ci, false);
  }
  return order;
}

} // namespace strongdim
