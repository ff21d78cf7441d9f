#include "strongdim/cotree.hpp"

#include "strongdim/generate.hpp"
#include "strongdim/sr_graph.hpp"
#include "strongdim/vertex_cover.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <cctype>
#include <map>

using namespace strongdim;

namespace {

/// Builds a co-tree from expressions like "(J a c (U (J b d) e))": J = join,
/// U = union, single letters are leaves. Vertex ids are assigned in leaf
/// order of appearance; `labels` receives one single-letter label per id.
struct TreeParser {
  std::string text;
  std::size_t pos = 0;
  CoTree tree;
  std::vector<std::string> labels;

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  int parse() {
    skip();
    if (text[pos] == '(') {
      ++pos;
      skip();
      CoTree::Kind kind =
          text[pos] == 'J' ? CoTree::Kind::Join : CoTree::Kind::Union;
      ++pos;
      int id = static_cast<int>(tree.nodes.size());
      tree.nodes.push_back({kind, {}, -1, -1, 0, -1, -1});
      while (true) {
        skip();
        if (text[pos] == ')') {
          ++pos;
          break;
        }
        int child = parse();
        tree.nodes[id].children.push_back(child);
        tree.nodes[child].parent = id;
      }
      for (int c : tree.nodes[id].children)
        tree.nodes[id].n += tree.nodes[c].n;
      return id;
    }
    int id = static_cast<int>(tree.nodes.size());
    VertexId v = static_cast<VertexId>(labels.size());
    labels.push_back(std::string(1, text[pos]));
    ++pos;
    tree.nodes.push_back({CoTree::Kind::Leaf, {}, -1, v, 1, -1, -1});
    tree.leaf_of.push_back(id);
    return id;
  }

  static TreeParser run(const std::string &expr) {
    TreeParser p{expr};
    p.tree.root = p.parse();
    return p;
  }
};

} // namespace

TEST_CASE("non-co-graphs are rejected with an induced 4-path witness") {
  Graph p4 = make_path(4);
  try {
    build_cotree(p4);
    FAIL("P4 accepted");
  } catch (const NotACographError &e) {
    auto [a, b, c, d] = e.witness();
    CHECK(p4.has_edge(a, b));
    CHECK(p4.has_edge(b, c));
    CHECK(p4.has_edge(c, d));
    CHECK(!p4.has_edge(a, c));
    CHECK(!p4.has_edge(a, d));
    CHECK(!p4.has_edge(b, d));
  }
  CHECK_THROWS_AS(build_cotree(make_cycle(5)), NotACographError);
}

TEST_CASE("canonical co-trees of standard co-graphs") {
  SUBCASE("clique: one join over leaves") {
    CoTree t = build_cotree(make_clique(4));
    CHECK(t.nodes[t.root].kind == CoTree::Kind::Join);
    CHECK(t.nodes[t.root].children.size() == 4);
  }
  SUBCASE("C4 is the join of two 2-vertex unions") {
    CoTree t = build_cotree(make_cycle(4));
    REQUIRE(t.nodes[t.root].kind == CoTree::Kind::Join);
    REQUIRE(t.nodes[t.root].children.size() == 2);
    for (int c : t.nodes[t.root].children) {
      CHECK(t.nodes[c].kind == CoTree::Kind::Union);
      CHECK(t.nodes[c].children.size() == 2);
    }
  }
  SUBCASE("alternation holds on random co-graphs") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 25; ++trial) {
      Graph g = random_cograph(11, rng);
      CoTree t = build_cotree(g);
      for (const auto &node : t.nodes)
        for (int c : node.children) {
          CHECK(t.nodes[c].kind != node.kind);
          CHECK(t.nodes[c].parent >= 0);
        }
    }
  }
}

TEST_CASE("co-tree realization round-trips") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = random_cograph(10, rng);
    std::vector<std::string> labels;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      labels.push_back(g.label(v));
    Graph back = cotree_to_graph(build_cotree(g), labels);
    CHECK(back.edge_list() == g.edge_list());
  }
}

TEST_CASE("SR co-tree: swapped kinds and twin-join grouping") {
  SUBCASE("K_k becomes a union root over one twin-join, realizing SR=K_k") {
    Graph k5 = make_clique(5);
    CoTree tsr = sr_cotree(build_cotree(k5));
    REQUIRE(tsr.nodes[tsr.root].kind == CoTree::Kind::Union);
    REQUIRE(tsr.nodes[tsr.root].children.size() == 1);
    int tj = tsr.nodes[tsr.root].children[0];
    CHECK(tsr.nodes[tj].kind == CoTree::Kind::TwinJoin);
    CHECK(tsr.nodes[tj].children.size() == 5);
    std::vector<std::string> labels;
    for (VertexId v = 0; v < 5; ++v)
      labels.push_back(k5.label(v));
    CHECK(cotree_to_graph(tsr, labels).edge_list() == k5.edge_list());
  }
  SUBCASE("two twin-joins in the nested fixture") {
    // join(a, b, union(f, join(c, d, union(g, h)))): both joins carry two
    // leaf children that turn into twin groups on the SR side
    auto parsed = TreeParser::run("(J a b (U f (J c d (U g h))))");
    CoTree tsr = sr_cotree(parsed.tree);
    int twin_joins = 0;
    for (const auto &node : tsr.nodes)
      if (node.kind == CoTree::Kind::TwinJoin) {
        ++twin_joins;
        REQUIRE(node.children.size() == 2);
        std::vector<std::string> pair{
            parsed.labels[tsr.nodes[node.children[0]].vertex],
            parsed.labels[tsr.nodes[node.children[1]].vertex]};
        std::sort(pair.begin(), pair.end());
        CHECK((pair == std::vector<std::string>{"a", "b"} ||
               pair == std::vector<std::string>{"c", "d"}));
      }
    CHECK(twin_joins == 2);
  }
  SUBCASE("realized SR co-tree equals the BFS-built SR graph") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 100; ++trial) {
      Graph g = random_cograph(2 + static_cast<int>(rng() % 11), rng);
      std::vector<std::string> labels;
      for (VertexId v = 0; v < g.vertex_count(); ++v)
        labels.push_back(g.label(v));
      Graph realized = cotree_to_graph(sr_cotree(build_cotree(g)), labels);
      CHECK(realized.edge_list() == strong_resolving_graph(g).edge_list());
    }
  }
}

TEST_CASE("bottom-up cover sizes match the exact solver") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_cograph(2 + static_cast<int>(rng() % 13), rng);
    CoTree tsr = sr_cotree(build_cotree(g));
    set_excluded(tsr, {});
    alg1_vc(tsr);
    Graph sr = strong_resolving_graph(g);
    CHECK(tsr.nodes[tsr.root].vc ==
          static_cast<long long>(min_vertex_cover(sr).size));
    CHECK(is_vertex_cover(sr, vc_witness(tsr)));
    CHECK(vc_witness(tsr).size() ==
          static_cast<std::size_t>(tsr.nodes[tsr.root].vc));
  }
}

TEST_CASE("query climb, batch increments and witnesses agree with the "
          "exact oracle, including excluded vertices") {
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    Graph g = random_cograph(n, rng);
    CoTree tg = build_cotree(g);
    CoTree tsr = sr_cotree(tg);
    std::vector<VertexId> excluded;
    for (VertexId v = 0; v < n; ++v)
      if (rng() % 4 == 0)
        excluded.push_back(v);
    set_excluded(tsr, excluded);
    alg1_vc(tsr);
    alg3_increments(tsr);

    Graph sr_reduced = remove_vertices(strong_resolving_graph(g), excluded);
    auto surviving = [&](VertexId v) {
      return std::find(excluded.begin(), excluded.end(), v) == excluded.end();
    };
    CHECK(tsr.nodes[tsr.root].vc ==
          static_cast<long long>(min_vertex_cover(sr_reduced).size));

    for (VertexId w = 0; w < n; ++w) {
      long long batch = xvc_query(tsr, w);
      CHECK(batch == alg2_xvc(tg, tsr, w));
      std::vector<VertexId> forced;
      for (VertexId u : maximally_distant_set(g, w))
        if (surviving(u))
          forced.push_back(sr_reduced.id_of(g.label(u)));
      CHECK(batch == static_cast<long long>(
                         min_vertex_cover_containing(sr_reduced, forced)
                             .size));
      auto witness = xvc_witness(tsr, w);
      CHECK(witness.size() == static_cast<std::size_t>(batch));
      std::vector<VertexId> witness_reduced;
      for (VertexId u : witness)
        witness_reduced.push_back(sr_reduced.id_of(g.label(u)));
      CHECK(is_vertex_cover(sr_reduced, witness_reduced));
      for (VertexId u : forced)
        CHECK(std::find(witness_reduced.begin(), witness_reduced.end(), u) !=
              witness_reduced.end());
    }
  }
}

TEST_CASE("single-vertex graph answers zero") {
  Graph g;
  g.add_vertex("w");
  CoTree tg = build_cotree(g);
  CoTree tsr = sr_cotree(tg);
  set_excluded(tsr, {});
  alg1_vc(tsr);
  alg3_increments(tsr);
  CHECK(tsr.nodes[tsr.root].vc == 0);
  CHECK(xvc_query(tsr, 0) == 0);
  CHECK(alg2_xvc(tg, tsr, 0) == 0);
}

namespace {

/// 13-leaf fixture whose printed n/vc/m decompositions the batch queries
/// must reproduce, with and without excluded vertices.
const char *kThirteenLeaves =
    "(J a c (U (J b d) (J (U i (J e h f g)) (U (J j k) (J l m)))))";

} // namespace

TEST_CASE("thirteen-leaf fixture: full-graph query values") {
  auto parsed = TreeParser::run(kThirteenLeaves);
  CoTree tg = parsed.tree;
  CoTree tsr = sr_cotree(tg);
  set_excluded(tsr, {});
  alg1_vc(tsr);
  alg3_increments(tsr);

  auto id = [&](const std::string &label) {
    return static_cast<VertexId>(
        std::find(parsed.labels.begin(), parsed.labels.end(), label) -
        parsed.labels.begin());
  };
  CHECK(tsr.nodes[tsr.root].vc == 10);

  // w=a: predecessor is the root, 13 - 1 + 0
  VertexId a = id("a");
  int ua = tsr.parent_in_g(tsr.leaf_of[a]);
  CHECK(tsr.nodes[ua].n == 13);
  CHECK(tsr.nodes[ua].m == 0);
  CHECK(xvc_query(tsr, a) == 12);

  // w=e: 4 - 1 + 7
  VertexId e = id("e");
  int ue = tsr.parent_in_g(tsr.leaf_of[e]);
  CHECK(tsr.nodes[ue].n == 4);
  CHECK(tsr.nodes[ue].m == 7);
  CHECK(xvc_query(tsr, e) == 10);

  // w=i: 5 - 1 + 6
  VertexId i = id("i");
  int ui = tsr.parent_in_g(tsr.leaf_of[i]);
  CHECK(tsr.nodes[ui].n == 5);
  CHECK(tsr.nodes[ui].m == 6);
  CHECK(xvc_query(tsr, i) == 10);

  // the canonical co-tree rebuilt from the realized graph answers the same
  Graph g = cotree_to_graph(tg, parsed.labels);
  CoTree tsr2 = sr_cotree(build_cotree(g));
  set_excluded(tsr2, {});
  alg1_vc(tsr2);
  alg3_increments(tsr2);
  CHECK(tsr2.nodes[tsr2.root].vc == 10);
  CHECK(xvc_query(tsr2, g.id_of("a")) == 12);
  CHECK(xvc_query(tsr2, g.id_of("e")) == 10);
  CHECK(xvc_query(tsr2, g.id_of("i")) == 10);
}

TEST_CASE("thirteen-leaf fixture: queries after zeroing a, b and h") {
  auto parsed = TreeParser::run(kThirteenLeaves);
  CoTree tsr = sr_cotree(parsed.tree);
  auto id = [&](const std::string &label) {
    return static_cast<VertexId>(
        std::find(parsed.labels.begin(), parsed.labels.end(), label) -
        parsed.labels.begin());
  };
  set_excluded(tsr, {id("a"), id("b"), id("h")});
  alg1_vc(tsr);
  alg3_increments(tsr);

  // a: 10 - 0 + 0; e: 3 - 1 + 5; h: 3 - 0 + 5
  CHECK(xvc_query(tsr, id("a")) == 10);
  CHECK(xvc_query(tsr, id("e")) == 7);
  CHECK(xvc_query(tsr, id("h")) == 8);
}
