#include <catch_amalgamated.hpp>

#include "gss/graph.hpp"

using namespace gss;

TEST_CASE("first Betti number", "[graph]") {
  CHECK(first_betti(wheel(3)) == 3);
  CHECK(first_betti(points(1)) == 0);
  CHECK(first_betti(tadpole()) == 1);
  CHECK(first_betti(Graph()) == 0);
  CHECK(first_betti(points(4)) == 0);
  CHECK(first_betti(wheel(5)) == 5);
}

TEST_CASE("isolated vertices are split off the core", "[graph]") {
  Graph g(4, {{1, 3}}, 2);
  CHECK(g.num_core_vertices() == 2);
  CHECK(g.num_isolated() == 4);
  CHECK(g.edges()[0] == Edge{0, 1});
  CHECK(g.num_components() == 5);
}

TEST_CASE("contract", "[graph]") {
  Surgery s = contract(interval(), 0);
  CHECK(s.graph == points(1));
  CHECK(s.edge_origin.empty());

  Graph dbl(2, {{0, 1}, {0, 1}});
  Surgery t = contract(dbl, 0);
  CHECK(t.graph == tadpole());
  CHECK(t.edge_origin == std::vector<EdgeId>{1});

  CHECK(contract(tadpole(), 0).graph == points(1));
  CHECK_THROWS_AS(contract(tadpole(), 1), GraphError);
  CHECK_THROWS_AS(contract(tadpole(), -1), GraphError);
}

TEST_CASE("delete", "[graph]") {
  CHECK(delete_edge(interval(), 0).graph == points(2));
  CHECK(delete_edge(tadpole(), 0).graph == points(1));
  Graph w = wheel(3);
  Surgery s = delete_edge(w, 4);  // a rim edge
  CHECK(first_betti(s.graph) == 2);
  CHECK(s.edge_origin == std::vector<EdgeId>{0, 1, 2, 3, 5});
  CHECK(s.graph.num_vertices() == 4);
}

TEST_CASE("restrict and quotient", "[graph]") {
  std::vector<EdgeId> none;
  std::vector<EdgeId> all{0};
  CHECK(restrict_to(interval(), none).graph == points(2));
  CHECK(quotient(interval(), none).graph == interval());
  CHECK(restrict_to(interval(), all).graph == interval());
  CHECK(quotient(interval(), all).graph == points(1));

  // Collapsing a spoke of the wheel doubles the two rim edges at its end.
  Graph w = wheel(3);
  std::vector<EdgeId> spoke{0};
  Graph q = quotient(w, spoke).graph;
  CHECK(q.num_core_vertices() == 3);
  int doubled = 0;
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      int m = 0;
      for (const Edge& e : q.edges()) {
        if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) ++m;
      }
      if (m == 2) ++doubled;
    }
  }
  CHECK(doubled == 2);
  CHECK_THROWS_AS(restrict_to(interval(), std::vector<EdgeId>{3}), GraphError);

  CHECK(restrict_mask(w, 0b11) == restrict_to(w, std::vector<EdgeId>{0, 1}).graph);
  CHECK(quotient_mask(w, 0b11) == quotient(w, std::vector<EdgeId>{0, 1}).graph);
}

TEST_CASE("edge classification", "[graph]") {
  auto ci = classify_edges(interval());
  CHECK(ci[0].is_bridge);
  CHECK(ci[0].is_bridge_to_nowhere);
  CHECK_FALSE(ci[0].is_tadpole);

  auto ct = classify_edges(tadpole());
  CHECK(ct[0].is_tadpole);
  CHECK_FALSE(ct[0].is_bridge);

  for (const auto& c : classify_edges(wheel(3))) {
    CHECK_FALSE(c.is_bridge);
    CHECK_FALSE(c.is_tadpole);
  }

  // Path of three edges: the middle edge is a bridge with no leaf.
  auto cp = classify_edges(Graph(4, {{0, 1}, {1, 2}, {2, 3}}));
  CHECK(cp[1].is_bridge);
  CHECK_FALSE(cp[1].is_bridge_to_nowhere);
  CHECK(cp[0].is_bridge_to_nowhere);
}

TEST_CASE("wheel and loop constructors", "[graph]") {
  Graph w3 = wheel(3);
  CHECK(w3.num_vertices() == 4);
  CHECK(w3.num_edges() == 6);
  CHECK(wheel(5).num_edges() == 10);
  Graph l5 = loop_graph(5);
  CHECK(first_betti(l5) == 1);
  CHECK(l5.num_edges() - first_betti(l5) == 4);
  CHECK(loop_graph(1) == tadpole());
  CHECK_THROWS_AS(wheel(2), GraphError);
  CHECK_THROWS_AS(loop_graph(0), GraphError);
}

TEST_CASE("half-edge presentation", "[graph]") {
  for (const Graph& g : {wheel(3), tadpole(), points(3), Graph(3, {{0, 0}, {0, 1}, {0, 1}}, 2)}) {
    HalfEdgeStructure h = to_half_edges(g);
    CHECK_NOTHROW(validate_half_edges(h));
    CHECK(from_half_edges(h) == g);
  }
  HalfEdgeStructure bad{{1, 0}, {0, 0}};
  CHECK_THROWS_AS(validate_half_edges(bad), GraphError);
  HalfEdgeStructure bad2{{0, 2, 1}, {0, 1, 0}};
  CHECK_THROWS_AS(validate_half_edges(bad2), GraphError);
}

TEST_CASE("text format round trip", "[graph]") {
  Graph g(3, {{0, 0}, {0, 1}, {2, 1}}, 2);
  std::string s = format_graph(g);
  CHECK(s == "V=3 ISO=2 E=0-0,0-1,2-1");
  CHECK(parse_graph(s) == g);
  CHECK(parse_graph("V=0 ISO=0 E=") == Graph());
  CHECK(parse_graph("V=0 ISO=2") == points(2));
  CHECK_THROWS_AS(parse_graph("V=2 ISO=0 E=0-0"), GraphError);
  CHECK_THROWS_AS(parse_graph("garbage"), GraphError);
}

TEST_CASE("disjoint union concatenates edge orders", "[graph]") {
  Graph u = disjoint_union(tadpole(), interval());
  CHECK(u.edges() == std::vector<Edge>{{0, 0}, {1, 2}});
  CHECK(disjoint_union(points(1), points(1)) == points(2));
}
