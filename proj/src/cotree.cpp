#include "strongdim/cotree.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace strongdim {

namespace {

std::vector<std::vector<VertexId>>
components_of(const Graph &g, const std::vector<VertexId> &part,
              bool complement) {
  std::vector<char> in_part(g.vertex_count(), 0);
  for (VertexId v : part)
    in_part[v] = 1;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<std::vector<VertexId>> comps;
  for (VertexId s : part) {
    if (seen[s])
      continue;
    std::vector<VertexId> comp, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      if (!complement) {
        for (VertexId v : g.neighbors(u))
          if (in_part[v] && !seen[v]) {
            seen[v] = 1;
            stack.push_back(v);
          }
      } else {
        std::vector<char> adj(g.vertex_count(), 0);
        for (VertexId v : g.neighbors(u))
          adj[v] = 1;
        for (VertexId v : part)
          if (v != u && !adj[v] && !seen[v]) {
            seen[v] = 1;
            stack.push_back(v);
          }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

[[noreturn]] void throw_p4(const Graph &g, const std::vector<VertexId> &part) {
  // both g[part] and its complement are connected, so an induced path on
  // four vertices exists inside part
  for (VertexId b : part)
    for (VertexId c : g.neighbors(b)) {
      if (!std::binary_search(part.begin(), part.end(), c))
        continue;
      for (VertexId a : part) {
        if (a == b || a == c || !g.has_edge(a, b) || g.has_edge(a, c))
          continue;
        for (VertexId d : part) {
          if (d == a || d == b || d == c)
            continue;
          if (g.has_edge(c, d) && !g.has_edge(b, d) && !g.has_edge(a, d))
            throw NotACographError({a, b, c, d});
        }
      }
    }
  throw std::logic_error("indivisible part without induced 4-path");
}

int build_rec(const Graph &g, CoTree &t, const std::vector<VertexId> &part,
              bool try_union) {
  if (part.size() == 1) {
    int id = static_cast<int>(t.nodes.size());
    t.nodes.push_back({CoTree::Kind::Leaf, {}, -1, part[0], 1, -1, -1});
    t.leaf_of[part[0]] = id;
    return id;
  }
  auto comps = components_of(g, part, !try_union);
  if (comps.size() == 1) {
    if (try_union)
      return build_rec(g, t, part, false);
    throw_p4(g, part);
  }
  int id = static_cast<int>(t.nodes.size());
  t.nodes.push_back({try_union ? CoTree::Kind::Union : CoTree::Kind::Join,
                     {},
                     -1,
                     -1,
                     static_cast<long long>(part.size()),
                     -1,
                     -1});
  for (auto &comp : comps) {
    int c = build_rec(g, t, comp, !try_union);
    t.nodes[id].children.push_back(c);
    t.nodes[c].parent = id;
  }
  return id;
}

} // namespace

CoTree build_cotree(const Graph &g) {
  CoTree t;
  t.leaf_of.assign(g.vertex_count(), -1);
  std::vector<VertexId> all(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    all[v] = v;
  if (g.vertex_count() == 0)
    return t;
  t.root = build_rec(g, t, all, true);
  return t;
}

CoTree sr_cotree(const CoTree &tg) {
  CoTree t = tg;
  for (auto &node : t.nodes) {
    if (node.kind == CoTree::Kind::Union)
      node.kind = CoTree::Kind::Join;
    else if (node.kind == CoTree::Kind::Join)
      node.kind = CoTree::Kind::Union;
  }
  // true twins of the original graph, i.e. leaf children of union nodes of
  // the SR co-tree, form a clique in SR; group them under a twin-join node
  const std::size_t original = t.nodes.size();
  for (std::size_t id = 0; id < original; ++id) {
    if (t.nodes[id].kind != CoTree::Kind::Union)
      continue;
    std::vector<int> leaves, rest;
    for (int c : t.nodes[id].children)
      (t.nodes[c].kind == CoTree::Kind::Leaf ? leaves : rest).push_back(c);
    if (leaves.size() < 2)
      continue;
    int tj = static_cast<int>(t.nodes.size());
    long long n = 0;
    for (int c : leaves)
      n += t.nodes[c].n;
    t.nodes.push_back(
        {CoTree::Kind::TwinJoin, leaves, static_cast<int>(id), -1, n, -1, -1});
    for (int c : leaves)
      t.nodes[c].parent = tj;
    rest.push_back(tj);
    t.nodes[id].children = std::move(rest);
  }
  return t;
}

void set_excluded(CoTree &t, const std::vector<VertexId> &excluded) {
  for (auto &node : t.nodes) {
    if (node.kind == CoTree::Kind::Leaf)
      node.n = 1;
    node.vc = -1;
    node.m = -1;
  }
  for (VertexId v : excluded)
    t.nodes[t.leaf_of[v]].n = 0;
  // leaves precede their parent only on the G side; recompute generically
  std::vector<int> order, stack{t.root};
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    order.push_back(id);
    for (int c : t.nodes[id].children)
      stack.push_back(c);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto &node = t.nodes[*it];
    if (node.kind != CoTree::Kind::Leaf) {
      node.n = 0;
      for (int c : node.children)
        node.n += t.nodes[c].n;
    }
  }
}

namespace {

std::vector<int> bottom_up_order(const CoTree &t) {
  std::vector<int> order, stack{t.root};
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    order.push_back(id);
    for (int c : t.nodes[id].children)
      stack.push_back(c);
  }
  std::reverse(order.begin(), order.end());
  return order;
}

} // namespace

void alg1_vc(CoTree &tsr) {
  for (int id : bottom_up_order(tsr)) {
    auto &node = tsr.nodes[id];
    switch (node.kind) {
    case CoTree::Kind::Leaf:
      node.vc = 0;
      break;
    case CoTree::Kind::Union: {
      node.vc = 0;
      for (int c : node.children)
        node.vc += tsr.nodes[c].vc;
      break;
    }
    case CoTree::Kind::Join:
    case CoTree::Kind::TwinJoin: {
      // the join makes everything outside one child part a cover
      long long best = std::numeric_limits<long long>::max();
      for (int c : node.children)
        best = std::min(best, node.n - tsr.nodes[c].n + tsr.nodes[c].vc);
      node.vc = best;
      break;
    }
    }
  }
}

long long alg2_xvc(const CoTree &tg, const CoTree &tsr, VertexId w) {
  (void)tg;
  int leaf = tsr.leaf_of[w];
  int u = tsr.parent_in_g(leaf);
  if (u == -1)
    return 0;
  // cover MD(G,w) \ W first: everything surviving next to w in its
  // predecessor's part, then climb and cover what a join-ancestor forces
  long long total = tsr.nodes[u].n - tsr.nodes[leaf].n;
  int at = u;
  while (at != tsr.root) {
    int p = tsr.nodes[at].parent;
    for (int sib : tsr.nodes[p].children) {
      if (sib == at)
        continue;
      if (tsr.nodes[p].kind == CoTree::Kind::Join)
        total += tsr.nodes[sib].n;
      else
        total += tsr.nodes[sib].vc;
    }
    at = p;
  }
  return total;
}

void alg3_increments(CoTree &tsr) {
  tsr.nodes[tsr.root].m = 0;
  std::vector<int> stack{tsr.root};
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    const auto &node = tsr.nodes[id];
    long long n_sum = 0, vc_sum = 0;
    for (int c : node.children) {
      n_sum += tsr.nodes[c].n;
      vc_sum += tsr.nodes[c].vc;
    }
    for (int c : node.children) {
      auto &child = tsr.nodes[c];
      if (child.kind == CoTree::Kind::Leaf)
        continue;
      long long add = node.kind == CoTree::Kind::Join ? n_sum - child.n
                                                      : vc_sum - child.vc;
      // twin-join nodes are not part of the original co-tree; their m is
      // what their children (leaves) would see, so pass it through
      child.m = node.kind == CoTree::Kind::TwinJoin ? node.m : node.m + add;
      stack.push_back(c);
    }
  }
}

long long xvc_query(const CoTree &tsr, VertexId w) {
  int leaf = tsr.leaf_of[w];
  int u = tsr.parent_in_g(leaf);
  if (u == -1)
    return 0;
  return tsr.nodes[u].n - tsr.nodes[leaf].n + tsr.nodes[u].m;
}

namespace {

void surviving_leaves(const CoTree &t, int node, std::vector<VertexId> &out) {
  std::vector<int> stack{node};
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    if (t.nodes[id].kind == CoTree::Kind::Leaf) {
      if (t.nodes[id].n == 1)
        out.push_back(t.nodes[id].vertex);
    } else {
      for (int c : t.nodes[id].children)
        stack.push_back(c);
    }
  }
}

void vc_witness_node(const CoTree &t, int node, std::vector<VertexId> &out) {
  const auto &nd = t.nodes[node];
  switch (nd.kind) {
  case CoTree::Kind::Leaf:
    break;
  case CoTree::Kind::Union:
    for (int c : nd.children)
      vc_witness_node(t, c, out);
    break;
  case CoTree::Kind::Join:
  case CoTree::Kind::TwinJoin: {
    int best = nd.children.front();
    for (int c : nd.children)
      if (nd.n - t.nodes[c].n + t.nodes[c].vc <
          nd.n - t.nodes[best].n + t.nodes[best].vc)
        best = c;
    for (int c : nd.children)
      if (c != best)
        surviving_leaves(t, c, out);
    vc_witness_node(t, best, out);
    break;
  }
  }
}

} // namespace

std::vector<VertexId> vc_witness(const CoTree &tsr) {
  std::vector<VertexId> out;
  if (tsr.root != -1)
    vc_witness_node(tsr, tsr.root, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> xvc_witness(const CoTree &tsr, VertexId w) {
  std::vector<VertexId> out;
  int leaf = tsr.leaf_of[w];
  int u = tsr.parent_in_g(leaf);
  if (u == -1)
    return out;
  surviving_leaves(tsr, u, out);
  out.erase(std::remove(out.begin(), out.end(), w), out.end());
  int at = u;
  while (at != tsr.root) {
    int p = tsr.nodes[at].parent;
    for (int sib : tsr.nodes[p].children) {
      if (sib == at)
        continue;
      if (tsr.nodes[p].kind == CoTree::Kind::Join)
        surviving_leaves(tsr, sib, out);
      else
        vc_witness_node(tsr, sib, out);
    }
    at = p;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph cotree_to_graph(const CoTree &t,
                      const std::vector<std::string> &label_of) {
  Graph g;
  if (t.root == -1)
    return g;
  std::vector<VertexId> all;
  surviving_leaves(t, t.root, all);
  std::sort(all.begin(), all.end());
  for (VertexId v : all)
    g.add_vertex(label_of[v]);

  // post-order assembly: join nodes add all cross edges between the
  // surviving leaf sets of their children
  struct Item {
    int node;
    bool expanded;
  };
  std::vector<Item> stack{{t.root, false}};
  std::vector<std::vector<VertexId>> parts(t.nodes.size());
  while (!stack.empty()) {
    auto [id, expanded] = stack.back();
    stack.pop_back();
    const auto &nd = t.nodes[id];
    if (!expanded) {
      if (nd.kind == CoTree::Kind::Leaf) {
        if (nd.n == 1)
          parts[id].push_back(nd.vertex);
        continue;
      }
      stack.push_back({id, true});
      for (int c : nd.children)
        stack.push_back({c, false});
      continue;
    }
    if (nd.kind != CoTree::Kind::Union)
      for (std::size_t i = 0; i < nd.children.size(); ++i)
        for (std::size_t j = i + 1; j < nd.children.size(); ++j)
          for (VertexId a : parts[nd.children[i]])
            for (VertexId b : parts[nd.children[j]])
              g.add_edge(g.id_of(label_of[a]), g.id_of(label_of[b]));
    for (int c : nd.children) {
      parts[id].insert(parts[id].end(), parts[c].begin(), parts[c].end());
      parts[c].clear();
      parts[c].shrink_to_fit();
    }
  }
  return g;
}

} // namespace strongdim
