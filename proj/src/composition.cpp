#include "strongdim/composition.hpp"

#include "strongdim/sr_graph.hpp"

#include <algorithm>

namespace strongdim {

namespace {

void check_part(const Graph &g) {
  if (g.vertex_count() < 2)
    throw SizeTooSmallError();
  if (!is_connected(g))
    throw NotConnectedError();
}

void check_input(const MergeInput &in) {
  check_part(in.parent);
  if (in.children.size() != in.attach.size())
    throw GraphError("children and attach lists differ in length");
  for (const auto &c : in.children) {
    check_part(c.graph);
    c.graph.id_of(c.attach); // must exist
  }
  for (const auto &v : in.attach)
    in.parent.id_of(v);
}

} // namespace

std::string merged_child_label(std::size_t index, const std::string &label) {
  return std::to_string(index) + ":" + label;
}

Graph merge(const MergeInput &in) {
  check_input(in);
  Graph j;
  // parent first so its ids stay in first-appearance order
  for (VertexId u = 0; u < in.parent.vertex_count(); ++u)
    j.add_vertex(in.parent.label(u));
  for (auto [a, b] : in.parent.edge_list())
    j.add_edge(a, b);
  for (std::size_t i = 0; i < in.children.size(); ++i) {
    const Graph &gi = in.children[i].graph;
    VertexId ui = gi.id_of(in.children[i].attach);
    for (VertexId u = 0; u < gi.vertex_count(); ++u)
      if (u != ui)
        j.add_vertex(merged_child_label(i + 1, gi.label(u)));
    for (auto [a, b] : gi.edge_list()) {
      VertexId ia = gi.id_of(a), ib = gi.id_of(b);
      if (ia == ui)
        j.add_edge(in.attach[i], merged_child_label(i + 1, b));
      else if (ib == ui)
        j.add_edge(merged_child_label(i + 1, a), in.attach[i]);
      else
        j.add_edge(merged_child_label(i + 1, a),
                   merged_child_label(i + 1, b));
    }
  }
  return j;
}

std::vector<std::string> md_composed(const MergeInput &in,
                                     const std::string &w) {
  check_input(in);
  std::vector<std::string> out;

  std::vector<char> is_attach(in.parent.vertex_count(), 0);
  for (const auto &v : in.attach)
    is_attach[in.parent.id_of(v)] = 1;

  auto add_parent_md = [&](VertexId from) {
    for (VertexId u : maximally_distant_set(in.parent, from))
      if (!is_attach[u])
        out.push_back(in.parent.label(u));
  };
  auto add_child_attach_md = [&](std::size_t i) {
    const Graph &gi = in.children[i].graph;
    for (VertexId u :
         maximally_distant_set(gi, gi.id_of(in.children[i].attach)))
      out.push_back(merged_child_label(i + 1, gi.label(u)));
  };

  if (auto pw = in.parent.find(w)) {
    // w lives in the parent
    add_parent_md(*pw);
    for (std::size_t i = 0; i < in.children.size(); ++i)
      add_child_attach_md(i);
  } else {
    // w must be a prefixed child label
    std::size_t j = in.children.size();
    std::string local;
    for (std::size_t i = 0; i < in.children.size(); ++i) {
      std::string prefix = std::to_string(i + 1) + ":";
      if (w.rfind(prefix, 0) == 0 &&
          in.children[i].graph.find(w.substr(prefix.size()))) {
        j = i;
        local = w.substr(prefix.size());
        break;
      }
    }
    if (j == in.children.size())
      throw UnknownVertexError(w);
    const Graph &gj = in.children[j].graph;
    VertexId uj = gj.id_of(in.children[j].attach);
    if (gj.id_of(local) == uj)
      throw UnknownVertexError(w); // u_j is not a vertex of the merge
    for (VertexId u : maximally_distant_set(gj, gj.id_of(local)))
      if (u != uj)
        out.push_back(merged_child_label(j + 1, gj.label(u)));
    add_parent_md(in.parent.id_of(in.attach[j]));
    for (std::size_t i = 0; i < in.children.size(); ++i)
      if (i != j)
        add_child_attach_md(i);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Graph sr_edges_composed(const MergeInput &in) {
  check_input(in);
  Graph sr;
  // identical vertex set (and id order) as merge(in)
  for (VertexId u = 0; u < in.parent.vertex_count(); ++u)
    sr.add_vertex(in.parent.label(u));
  for (std::size_t i = 0; i < in.children.size(); ++i) {
    const Graph &gi = in.children[i].graph;
    VertexId ui = gi.id_of(in.children[i].attach);
    for (VertexId u = 0; u < gi.vertex_count(); ++u)
      if (u != ui)
        sr.add_vertex(merged_child_label(i + 1, gi.label(u)));
  }

  std::vector<char> is_attach(in.parent.vertex_count(), 0);
  for (const auto &v : in.attach)
    is_attach[in.parent.id_of(v)] = 1;

  // case 1: per-child SR edges away from u_i
  for (std::size_t i = 0; i < in.children.size(); ++i) {
    const Graph &gi = in.children[i].graph;
    VertexId ui = gi.id_of(in.children[i].attach);
    Graph sri = strong_resolving_graph(gi);
    for (auto [a, b] : sri.edge_list()) {
      VertexId ia = gi.id_of(a), ib = gi.id_of(b);
      if (ia != ui && ib != ui)
        sr.add_edge(merged_child_label(i + 1, a),
                    merged_child_label(i + 1, b));
    }
  }
  // case 2: parent SR edges away from the attachment vertices
  {
    Graph srh = strong_resolving_graph(in.parent);
    for (auto [a, b] : srh.edge_list())
      if (!is_attach[in.parent.id_of(a)] && !is_attach[in.parent.id_of(b)])
        sr.add_edge(a, b);
  }
  // per-child MD(G_i, u_i) and parent-side MD(H, v_i) \ attach
  std::vector<std::vector<std::string>> child_md(in.children.size());
  std::vector<std::vector<std::string>> parent_md(in.children.size());
  for (std::size_t i = 0; i < in.children.size(); ++i) {
    const Graph &gi = in.children[i].graph;
    for (VertexId u :
         maximally_distant_set(gi, gi.id_of(in.children[i].attach)))
      child_md[i].push_back(merged_child_label(i + 1, gi.label(u)));
    for (VertexId u :
         maximally_distant_set(in.parent, in.parent.id_of(in.attach[i])))
      if (!is_attach[u])
        parent_md[i].push_back(in.parent.label(u));
  }
  // case 3: complete k-partite graph across the child MD sets
  for (std::size_t i = 0; i < in.children.size(); ++i)
    for (std::size_t j = i + 1; j < in.children.size(); ++j)
      for (const auto &a : child_md[i])
        for (const auto &b : child_md[j])
          sr.add_edge(a, b);
  // case 4: k complete bipartite graphs towards the parent MD sets
  for (std::size_t i = 0; i < in.children.size(); ++i)
    for (const auto &a : child_md[i])
      for (const auto &b : parent_md[i])
        sr.add_edge(a, b);
  return sr;
}

} // namespace strongdim
