#include "strongdim/generate.hpp"

#include <algorithm>
#include <stdexcept>

namespace strongdim {

namespace {

std::string num_label(const char *prefix, int i) {
  return std::string(prefix) + std::to_string(i);
}

int uniform(std::mt19937_64 &rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

} // namespace

Graph make_cycle(int n) {
  if (n < 3)
    throw GraphError("cycles need at least three vertices");
  Graph g;
  for (int i = 0; i < n; ++i)
    g.add_vertex(num_label("x", i));
  for (int i = 0; i < n; ++i)
    g.add_edge(i, (i + 1) % n);
  return g;
}

Graph make_path(int n) {
  if (n < 1)
    throw GraphError("paths need at least one vertex");
  Graph g;
  for (int i = 1; i <= n; ++i)
    g.add_vertex(num_label("p", i));
  for (int i = 0; i + 1 < n; ++i)
    g.add_edge(i, i + 1);
  return g;
}

Graph make_clique(int n) {
  if (n < 1)
    throw GraphError("cliques need at least one vertex");
  Graph g;
  for (int i = 1; i <= n; ++i)
    g.add_vertex(num_label("q", i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      g.add_edge(i, j);
  return g;
}

Graph make_grid(int n, int m) {
  if (n < 1 || m < 1)
    throw GraphError("grid dimensions must be positive");
  Graph g;
  auto at = [m](int i, int j) { return (i - 1) * m + (j - 1); };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j)
      g.add_vertex("r" + std::to_string(i) + "c" + std::to_string(j));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j) {
      if (i < n)
        g.add_edge(at(i, j), at(i + 1, j));
      if (j < m)
        g.add_edge(at(i, j), at(i, j + 1));
    }
  return g;
}

Graph random_connected_graph(int n, std::mt19937_64 &rng) {
  if (n < 1)
    throw GraphError("graphs need at least one vertex");
  Graph g;
  for (int i = 1; i <= n; ++i)
    g.add_vertex(num_label("v", i));
  for (int i = 1; i < n; ++i)
    g.add_edge(i, uniform(rng, 0, i - 1));
  int extra = n < 2 ? 0 : uniform(rng, 0, n);
  for (int e = 0; e < extra; ++e) {
    int a = uniform(rng, 0, n - 1), b = uniform(rng, 0, n - 1);
    if (a != b)
      g.add_edge(a, b);
  }
  return g;
}

Graph random_cograph(int n, std::mt19937_64 &rng) {
  if (n < 1)
    throw GraphError("graphs need at least one vertex");
  Graph g;
  for (int i = 1; i <= n; ++i)
    g.add_vertex(num_label("v", i));
  // recursive random partition; join levels add all cross edges, union
  // levels none. Starting with a join keeps the result connected.
  struct Builder {
    Graph &g;
    std::mt19937_64 &rng;
    void build(std::vector<VertexId> part, bool join) {
      if (part.size() <= 1)
        return;
      std::shuffle(part.begin(), part.end(), rng);
      int cut = uniform(rng, 1, static_cast<int>(part.size()) - 1);
      std::vector<VertexId> left(part.begin(), part.begin() + cut);
      std::vector<VertexId> right(part.begin() + cut, part.end());
      if (join)
        for (VertexId a : left)
          for (VertexId b : right)
            g.add_edge(a, b);
      build(std::move(left), !join);
      build(std::move(right), !join);
    }
    int uniform(std::mt19937_64 &r, int lo, int hi) {
      return std::uniform_int_distribution<int>(lo, hi)(r);
    }
  } builder{g, rng};
  std::vector<VertexId> all(n);
  for (int i = 0; i < n; ++i)
    all[i] = i;
  builder.build(std::move(all), true);
  return g;
}

ComponentSpec parse_component_spec(const std::string &text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw GraphError("component spec '" + text + "' needs kind:size");
  std::string kind = text.substr(0, colon);
  std::string size = text.substr(colon + 1);
  ComponentSpec spec{};
  try {
    if (kind == "grid") {
      auto x = size.find('x');
      if (x == std::string::npos)
        throw GraphError("grid spec needs <n>x<m>");
      spec.kind = ComponentSpec::Kind::Grid;
      spec.n = std::stoi(size.substr(0, x));
      spec.m = std::stoi(size.substr(x + 1));
      if (spec.n < 2 || spec.m < 2)
        throw GraphError("grid sides must be at least 2");
      return spec;
    }
    spec.n = std::stoi(size);
  } catch (const std::invalid_argument &) {
    throw GraphError("component spec '" + text + "' has a malformed size");
  } catch (const std::out_of_range &) {
    throw GraphError("component spec '" + text + "' has a malformed size");
  }
  if (kind == "cycle") {
    spec.kind = ComponentSpec::Kind::Cycle;
    if (spec.n < 3)
      throw GraphError("cycles need at least three vertices");
  } else if (kind == "cograph") {
    spec.kind = ComponentSpec::Kind::Cograph;
    if (spec.n < 2)
      throw GraphError("cograph components need at least two vertices");
  } else if (kind == "random") {
    spec.kind = ComponentSpec::Kind::Random;
    if (spec.n < 2)
      throw GraphError("random components need at least two vertices");
  } else {
    throw GraphError("unknown component kind '" + kind + "'");
  }
  return spec;
}

GeneratedInstance compose_components(const std::vector<ComponentSpec> &specs,
                                     std::uint64_t seed) {
  if (specs.empty())
    throw GraphError("at least one component spec required");
  std::mt19937_64 rng(seed);
  GeneratedInstance out;
  std::vector<std::string> pool; // attachment candidates, insertion order
  for (std::size_t k = 0; k < specs.size(); ++k) {
    const ComponentSpec &spec = specs[k];
    Graph part;
    GeneratedInstance::Part meta;
    switch (spec.kind) {
    case ComponentSpec::Kind::Cycle:
      part = make_cycle(spec.n);
      meta.cls = "cycle";
      break;
    case ComponentSpec::Kind::Grid:
      part = make_grid(spec.n, spec.m);
      meta.cls = "grid";
      break;
    case ComponentSpec::Kind::Cograph:
      part = random_cograph(spec.n, rng);
      meta.cls = "cograph";
      break;
    case ComponentSpec::Kind::Random:
      part = random_connected_graph(spec.n, rng);
      meta.cls = "random";
      break;
    }
    std::string prefix = "c" + std::to_string(k) + ".";
    VertexId attach_local = -1;
    std::string attach_label;
    if (k > 0) {
      attach_local = uniform(rng, 0, part.vertex_count() - 1);
      attach_label = pool[static_cast<std::size_t>(
          uniform(rng, 0, static_cast<int>(pool.size()) - 1))];
      meta.attach = attach_label;
    }
    auto rename = [&](VertexId v) {
      return v == attach_local ? attach_label : prefix + part.label(v);
    };
    for (VertexId v = 0; v < part.vertex_count(); ++v) {
      std::string lab = rename(v);
      out.graph.add_vertex(lab);
      meta.vertices.push_back(lab);
      if (v != attach_local)
        pool.push_back(lab);
    }
    for (auto &[a, b] : part.edge_list())
      out.graph.add_edge(rename(part.id_of(a)), rename(part.id_of(b)));
    std::sort(meta.vertices.begin(), meta.vertices.end());
    out.parts.push_back(std::move(meta));
  }
  return out;
}

MergeInput random_merge_input(std::mt19937_64 &rng, int max_children,
                              int max_part) {
  auto random_part = [&](int min_n) {
    int n = uniform(rng, std::max(min_n, 2), max_part);
    switch (uniform(rng, 0, 3)) {
    case 0:
      return make_cycle(std::max(n, 3));
    case 1:
      return make_path(n);
    case 2:
      return make_clique(n);
    default:
      return random_connected_graph(n, rng);
    }
  };
  MergeInput in;
  in.parent = random_part(2);
  int k = uniform(rng, 1, max_children);
  for (int i = 0; i < k; ++i) {
    Graph child = random_part(2);
    std::string attach =
        child.label(uniform(rng, 0, child.vertex_count() - 1));
    in.children.push_back({std::move(child), std::move(attach)});
    in.attach.push_back(
        in.parent.label(uniform(rng, 0, in.parent.vertex_count() - 1)));
  }
  return in;
}

} // namespace strongdim
