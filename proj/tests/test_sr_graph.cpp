#include "strongdim/sr_graph.hpp"

#include "strongdim/generate.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace strongdim;

namespace {

std::vector<std::string> md_labels(const Graph &g, const std::string &w) {
  return labels_of(g, maximally_distant_set(g, g.id_of(w)));
}

} // namespace

TEST_CASE("maximally distant sets on a path") {
  Graph p3 = testutil::from_pairs({{"a", "b"}, {"b", "c"}});
  CHECK(md_labels(p3, "a") == std::vector<std::string>{"c"});
  CHECK(md_labels(p3, "b") == std::vector<std::string>{"a", "c"});
}

TEST_CASE("single vertex is maximally distant from itself") {
  Graph g;
  g.add_vertex("only");
  CHECK(maximally_distant_set(g, 0) == std::vector<VertexId>{0});
}

TEST_CASE("disconnected input is rejected") {
  Graph g = testutil::from_pairs({{"a", "b"}, {"x", "y"}});
  CHECK_THROWS_AS(maximally_distant_set(g, 0), DisconnectedError);
}

TEST_CASE("SR of small standard graphs") {
  SUBCASE("C4 gives the two diagonals") {
    Graph sr = strong_resolving_graph(make_cycle(4));
    CHECK(sr.edge_list() == std::vector<std::pair<std::string, std::string>>{
                                {"x0", "x2"}, {"x1", "x3"}});
  }
  SUBCASE("C6 gives the antipodal matching") {
    Graph sr = strong_resolving_graph(make_cycle(6));
    CHECK(sr.edge_list() == std::vector<std::pair<std::string, std::string>>{
                                {"x0", "x3"}, {"x1", "x4"}, {"x2", "x5"}});
  }
  SUBCASE("cliques are their own SR") {
    Graph k4 = make_clique(4);
    CHECK(strong_resolving_graph(k4).edge_list() == k4.edge_list());
  }
  SUBCASE("a path keeps only its endpoint pair") {
    Graph sr = strong_resolving_graph(make_path(5));
    CHECK(sr.edge_list() == std::vector<std::pair<std::string, std::string>>{
                                {"p1", "p5"}});
  }
}

TEST_CASE("mutual maximal distance is symmetric and matches SR edges") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_connected_graph(8, rng);
    Graph sr = strong_resolving_graph(g);
    for (VertexId u = 0; u < g.vertex_count(); ++u)
      for (VertexId v = u + 1; v < g.vertex_count(); ++v) {
        bool mmd = is_mutually_maximally_distant(g, u, v);
        CHECK(mmd == is_mutually_maximally_distant(g, v, u));
        CHECK(mmd == sr.has_edge(u, v));
      }
  }
}

TEST_CASE("definition replay: no neighbor of an MD member is farther") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_connected_graph(9, rng);
    for (VertexId w = 0; w < g.vertex_count(); ++w) {
      auto dist = bfs_distances(g, w).dist;
      std::vector<char> in_md(g.vertex_count(), 0);
      for (VertexId u : maximally_distant_set(g, w))
        in_md[u] = 1;
      for (VertexId u = 0; u < g.vertex_count(); ++u) {
        bool maximal = true;
        for (VertexId z : g.neighbors(u))
          maximal = maximal && dist[z] <= dist[u];
        CHECK(static_cast<bool>(in_md[u]) == (maximal && u != w));
      }
    }
  }
}

TEST_CASE("MD sets of the 7-cycle used by the composition fixture") {
  Graph h = testutil::from_pairs({{"i", "j"},
                                  {"j", "k"},
                                  {"k", "l"},
                                  {"l", "m"},
                                  {"m", "n"},
                                  {"n", "o"},
                                  {"o", "i"}});
  CHECK(md_labels(h, "i") == std::vector<std::string>{"l", "m"});
  CHECK(md_labels(h, "n") == std::vector<std::string>{"j", "k"});
  CHECK(md_labels(h, "m") == std::vector<std::string>{"i", "j"});
  CHECK(md_labels(h, "l") == std::vector<std::string>{"i", "o"});
}
