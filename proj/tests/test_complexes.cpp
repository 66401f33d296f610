#include <catch_amalgamated.hpp>

#include "gss/complexes.hpp"
#include "gss/enumerate.hpp"

using namespace gss;

namespace {

std::vector<Graph> nonzero_graphs(int max_edges, int max_isolated = 0) {
  EnumerationConstraints c;
  c.max_edges = max_edges;
  c.max_isolated = max_isolated;
  std::vector<Graph> out;
  for (const Graph& g : enumerate_graphs(c)) {
    if (!OrderedGenerator::normalize(g).is_zero()) out.push_back(g);
  }
  return out;
}

std::vector<Graph> connected_graphs(int max_edges) {
  EnumerationConstraints c;
  c.max_edges = max_edges;
  c.connected = true;
  c.min_valence = 1;
  c.min_edges = 1;
  return enumerate_graphs(c);
}

template <class F>
LinComb apply_linear(const LinComb& x, F f) {
  LinComb out;
  for (const auto& [key, t] : x.terms()) out.add(f(t.graph), t.coeff);
  return out;
}

}  // namespace

TEST_CASE("boundary examples", "[complexes]") {
  LinComb expected = LinComb::of(points(1)) - LinComb::of(points(2));
  CHECK(boundary_full(interval()) == expected);
  CHECK(boundary_full(tadpole()).is_zero());
  CHECK(boundary_gr(tadpole()).is_zero());
  CHECK(boundary_gr(interval()) == expected);
  CHECK(boundary_gr(wheel(3)).is_zero());
  CHECK(boundary_c(wheel(3)).is_zero());
  CHECK(boundary_full(Graph()).is_zero());
}

TEST_CASE("boundaries square to zero on small graphs", "[complexes][property]") {
  for (const Graph& g : nonzero_graphs(4, 1)) {
    INFO(format_graph(g));
    CHECK(apply_linear(boundary_full(g), boundary_full).is_zero());
    CHECK(apply_linear(boundary_gr(g), boundary_gr).is_zero());
  }
}

TEST_CASE("graded boundary preserves the first Betti number", "[complexes][property]") {
  for (const Graph& g : nonzero_graphs(5)) {
    const int b = first_betti(g);
    const LinComb gr = boundary_gr(g);
    const LinComb full = boundary_full(g);
    for (const auto& [key, t] : gr.terms()) CHECK(first_betti(t.graph) == b);
    for (const auto& [key, t] : full.terms()) CHECK(first_betti(t.graph) <= b);
  }
}

TEST_CASE("indecomposable boundary examples", "[complexes]") {
  CHECK(boundary_indec(interval(), IndecMode::Gr) == LinComb::of(points(1), -1));
  CHECK(boundary_indec(tadpole(), IndecMode::Gr).is_zero());
  CHECK(boundary_indec(complete_graph(4), IndecMode::Gr).is_zero());
  CHECK(boundary_indec(tadpole(), IndecMode::Full).is_zero());
  CHECK(boundary_indec(points(1), IndecMode::Gr).is_zero());
  CHECK_THROWS_AS(boundary_indec(points(2), IndecMode::Gr), GraphError);
  CHECK_THROWS_AS(boundary_indec(disjoint_union(interval(), tadpole()), IndecMode::Gr), GraphError);
}

TEST_CASE("explicit indecomposable boundary equals projected boundary", "[complexes][property]") {
  for (const Graph& g : connected_graphs(4)) {
    INFO(format_graph(g));
    CHECK(boundary_indec(g, IndecMode::Gr) == reduce_indecomposable(boundary_gr(g)));
    CHECK(boundary_indec(g, IndecMode::Full) == reduce_indecomposable(boundary_full(g)));
  }
}

TEST_CASE("projection to indecomposables", "[complexes]") {
  LinComb x = LinComb::of(points(3), 2) + LinComb::of(Graph()) +
              LinComb::of(disjoint_union(tadpole(), points(2))) +
              LinComb::of(disjoint_union(tadpole(), interval()));
  LinComb expected = LinComb::of(points(1), 6) + LinComb::of(tadpole());
  CHECK(reduce_indecomposable(x) == expected);
}

TEST_CASE("basis examples", "[complexes]") {
  ComplexSpec s;
  s.kind = ComplexKind::GrCmodX;
  s.truncation = {3, 0};
  ChainComplex cx = build_complex(s);
  CHECK(cx.basis.dim(0) == 1);
  CHECK(cx.basis.dim(1) == 2);
  CHECK(cx.basis.find(1, canonical_form(interval()).key) >= 0);
  CHECK(cx.basis.find(1, canonical_form(tadpole()).key) >= 0);

  s.kind = ComplexKind::IndecGrC;
  cx = build_complex(s);
  REQUIRE(cx.basis.dim(0) == 1);
  CHECK(cx.basis.generators[0][0] == points(1));

  s.kind = ComplexKind::GC2;
  s.truncation = {7, 0};
  s.b1 = 3;
  cx = build_complex(s);
  for (int d = 0; d < 6; ++d) CHECK(cx.basis.dim(d) == 0);
  REQUIRE(cx.basis.dim(6) == 1);
  CHECK(canonical_form(cx.basis.generators[6][0]).key == canonical_form(complete_graph(4)).key);
  CHECK(homology_of(cx, 6).dim == 1);
}

TEST_CASE("basis generators carry sign +1", "[complexes]") {
  ComplexSpec s;
  s.kind = ComplexKind::FullC;
  s.truncation = {4, 1};
  ChainComplex cx = build_complex(s);
  for (int d = 0; d <= 4; ++d) {
    for (std::size_t i = 0; i < cx.basis.generators[d].size(); ++i) {
      const Graph& g = cx.basis.generators[d][i];
      CHECK(OrderedGenerator::normalize(g).sign == 1);
      if (i > 0) CHECK(cx.basis.levels[d][i - 1] <= cx.basis.levels[d][i]);
      CHECK(g.num_vertices() <= s.vertex_cap());
    }
  }
}

TEST_CASE("every complex kind squares to zero", "[complexes][property]") {
  for (ComplexKind k : all_kinds()) {
    ComplexSpec s;
    s.kind = k;
    s.truncation = {4, 1};
    s.filtration = 1;
    ChainComplex cx = build_complex(s);
    INFO(s.describe());
    CHECK(boundary_squares_to_zero(cx));
  }
}

TEST_CASE("filtration pieces are subcomplexes", "[complexes][property]") {
  for (int n = 0; n <= 3; ++n) {
    ComplexSpec s;
    s.kind = ComplexKind::FilteredC;
    s.filtration = n;
    s.truncation = {4, 0};
    ChainComplex cx;
    REQUIRE_NOTHROW(cx = build_complex(s));
    for (int d = 0; d <= 4; ++d) {
      for (int lvl : cx.basis.levels[d]) CHECK(lvl <= n);
    }
  }
}

TEST_CASE("small homology computations", "[complexes]") {
  ComplexSpec s;
  s.kind = ComplexKind::GrCmodX;
  s.truncation = {4, 0};
  auto h = homology(s, {0, 1, 2, 3});
  CHECK(h[0].dim == 1);
  CHECK(h[1].dim == 1);
  CHECK(h[2].dim == 0);
  CHECK(h[3].dim == 0);
  CHECK(h[3].reliable);
  CHECK_FALSE(homology(s, {4})[0].reliable);

  s.kind = ComplexKind::IndecC;
  h = homology(s, {0, 1, 2, 3});
  CHECK(h[0].dim == 0);
  CHECK(h[1].dim == 1);
  CHECK(h[2].dim == 0);
  CHECK(h[3].dim == 0);

  s.kind = ComplexKind::FilteredC;
  s.filtration = 0;
  s.truncation = {4, 0};
  h = homology(s, {0, 1, 2, 3});
  CHECK(h[0].dim == 2);
  CHECK(h[0].reliable);
  for (int d = 1; d <= 3; ++d) CHECK(h[d].dim == 0);
}
