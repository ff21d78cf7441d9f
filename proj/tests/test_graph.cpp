#include "strongdim/graph.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace strongdim;

TEST_CASE("ids follow first appearance, labels stay stable") {
  Graph g;
  CHECK(g.add_vertex("b") == 0);
  CHECK(g.add_vertex("a") == 1);
  CHECK(g.add_vertex("b") == 0); // already present
  g.add_edge("a", "c");
  CHECK(g.vertex_count() == 3);
  CHECK(g.label(2) == "c");
  CHECK(g.find("c").value() == 2);
  CHECK(!g.find("zzz").has_value());
  CHECK_THROWS_AS(g.id_of("zzz"), UnknownVertexError);
}

TEST_CASE("duplicate edges are ignored, self-loops rejected") {
  Graph g;
  g.add_edge("a", "b");
  g.add_edge("b", "a");
  CHECK(g.edge_count() == 1);
  CHECK(g.degree(0) == 1);
  CHECK_THROWS_AS(g.add_edge("a", "a"), SelfLoopError);
}

TEST_CASE("edge_list and vertices_by_label are sorted") {
  Graph g = testutil::from_pairs({{"d", "c"}, {"b", "a"}, {"c", "a"}});
  auto edges = g.edge_list();
  REQUIRE(edges.size() == 3);
  CHECK(edges[0] == std::pair<std::string, std::string>{"a", "b"});
  CHECK(edges[1] == std::pair<std::string, std::string>{"a", "c"});
  CHECK(edges[2] == std::pair<std::string, std::string>{"c", "d"});
  auto order = g.vertices_by_label();
  for (std::size_t i = 1; i < order.size(); ++i)
    CHECK(g.label(order[i - 1]) < g.label(order[i]));
}

TEST_CASE("from_edge_list matches incremental construction") {
  Graph g = Graph::from_edge_list({{"x", "y"}, {"y", "z"}});
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(g.id_of("x"), g.id_of("y")));
  CHECK(!g.has_edge(g.id_of("x"), g.id_of("z")));
}

TEST_CASE("bfs distances on a path, unreachable marker across components") {
  Graph g = testutil::from_pairs({{"a", "b"}, {"b", "c"}, {"x", "y"}});
  auto d = bfs_distances(g, g.id_of("a")).dist;
  CHECK(d[g.id_of("a")] == 0);
  CHECK(d[g.id_of("b")] == 1);
  CHECK(d[g.id_of("c")] == 2);
  CHECK(d[g.id_of("x")] == kUnreachable);
  CHECK(!is_connected(g));
  Graph h = testutil::from_pairs({{"a", "b"}, {"b", "c"}});
  CHECK(is_connected(h));
  CHECK(is_connected(Graph{}));
}

TEST_CASE("remove_vertices keeps labels and drops incident edges") {
  Graph g = testutil::from_pairs({{"a", "b"}, {"b", "c"}, {"c", "a"}});
  Graph h = remove_vertices(g, {g.id_of("b")});
  CHECK(h.vertex_count() == 2);
  CHECK(h.edge_count() == 1);
  CHECK(h.has_edge(h.id_of("a"), h.id_of("c")));
}

TEST_CASE("labels_of sorts") {
  Graph g = testutil::from_pairs({{"b", "a"}, {"a", "c"}});
  auto labels = labels_of(g, {2, 0, 1});
  CHECK(labels == std::vector<std::string>{"a", "b", "c"});
}
