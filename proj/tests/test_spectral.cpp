#include <catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "gss/spectral.hpp"
#include "gss/oracle.hpp"

using namespace gss;

namespace {

struct Simplicial {
  FilteredComplex fc;
  std::vector<std::vector<std::vector<long>>> dense;  // dense[d] for d >= 1
};

// Random simplicial complex on v vertices, filtered by the largest vertex
// weight. Simplices are all subsets of random facets.
Simplicial random_filtered_simplicial(std::mt19937_64& rng, int v, int facets, int max_dim) {
  std::uniform_int_distribution<int> weight(0, 3);
  std::vector<int> w(v);
  for (int& x : w) x = weight(rng);
  std::set<std::vector<int>> simplices;
  std::uniform_int_distribution<int> size(1, max_dim + 1);
  std::vector<int> verts(v);
  std::iota(verts.begin(), verts.end(), 0);
  for (int f = 0; f < facets; ++f) {
    std::shuffle(verts.begin(), verts.end(), rng);
    std::vector<int> facet(verts.begin(), verts.begin() + size(rng));
    std::sort(facet.begin(), facet.end());
    const int k = static_cast<int>(facet.size());
    for (int mask = 1; mask < (1 << k); ++mask) {
      std::vector<int> s;
      for (int i = 0; i < k; ++i) {
        if (mask >> i & 1) s.push_back(facet[i]);
      }
      simplices.insert(s);
    }
  }
  auto level = [&](const std::vector<int>& s) {
    int m = 0;
    for (int x : s) m = std::max(m, w[x]);
    return m;
  };
  std::vector<std::vector<std::vector<int>>> by_dim(max_dim + 1);
  for (const auto& s : simplices) by_dim[s.size() - 1].push_back(s);
  Simplicial out;
  for (auto& list : by_dim) {
    std::stable_sort(list.begin(), list.end(),
                     [&](const auto& a, const auto& b) { return level(a) < level(b); });
    std::vector<int> l;
    for (const auto& s : list) l.push_back(level(s));
    out.fc.levels.push_back(l);
  }
  out.fc.boundary.push_back(RationalMatrix(0, static_cast<int>(by_dim[0].size())));
  out.dense.emplace_back();
  for (int d = 1; d <= max_dim; ++d) {
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < by_dim[d - 1].size(); ++i) index[by_dim[d - 1][i]] = static_cast<int>(i);
    std::vector<std::vector<long>> m(by_dim[d - 1].size(), std::vector<long>(by_dim[d].size(), 0));
    for (std::size_t c = 0; c < by_dim[d].size(); ++c) {
      const auto& s = by_dim[d][c];
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::vector<int> face = s;
        face.erase(face.begin() + static_cast<long>(i));
        m[index.at(face)][c] = i % 2 == 0 ? 1 : -1;
      }
    }
    RationalMatrix bm = m.empty() ? RationalMatrix(0, static_cast<int>(by_dim[d].size()))
                                  : RationalMatrix::from_dense(m);
    out.fc.boundary.push_back(bm);
    out.dense.push_back(m);
  }
  out.fc.complete_level = 3;
  out.fc.validate();
  return out;
}

int oracle_rank(const std::vector<std::vector<long>>& m) {
  if (m.empty() || m[0].empty()) return 0;
  return oracle::bareiss_rank(m);
}

}  // namespace

TEST_CASE("trivial filtration gives homology on the first page", "[spectral]") {
  const auto t = oracle::tetrahedron_boundary();
  FilteredComplex fc;
  fc.levels = {std::vector<int>(4, 0), std::vector<int>(6, 0), std::vector<int>(4, 0)};
  fc.boundary = {RationalMatrix(0, 4), t.d1, t.d2};
  SpectralSequence ss(fc);
  const Page p1 = ss.page(1);
  CHECK(p1.dim(0, 0) == 1);
  CHECK(p1.dim(0, 1) == 0);
  CHECK(p1.dim(0, 2) == 1);
  for (int r = 1; r <= 3; ++r) {
    for (const auto& [st, m] : ss.page(r).differential) CHECK(m.is_zero());
  }
}

TEST_CASE("two-step filtrations of the interval complex", "[spectral]") {
  // C_0 = {p, p^2}, C_1 = {I}, dI = p - p^2.
  const RationalMatrix d = RationalMatrix::from_dense({{1}, {-1}});
  {
    // p, p^2 at level 0 and I at level 1: d^1 [I] = [p] - [p^2].
    FilteredComplex fc;
    fc.levels = {{0, 0}, {1}};
    fc.boundary = {RationalMatrix(0, 2), d};
    fc.complete_level = 1;
    fc.validate();
    SpectralSequence ss(fc);
    const Page p1 = ss.page(1);
    CHECK(p1.dim(0, 0) == 2);
    CHECK(p1.dim(1, 0) == 1);
    CHECK(rank(p1.differential.at({1, 0})) == 1);
    const Page p2 = ss.page(2);
    CHECK(p2.dim(0, 0) == 1);
    CHECK(p2.dim(1, 0) == 0);
  }
  {
    // p^2 at level 1 with I: the associated graded already cancels them.
    FilteredComplex fc;
    fc.levels = {{0, 1}, {1}};
    fc.boundary = {RationalMatrix(0, 2), d};
    fc.complete_level = 1;
    fc.validate();
    SpectralSequence ss(fc);
    const Page p1 = ss.page(1);
    CHECK(p1.dim(0, 0) == 1);
    CHECK(p1.dim(1, -1) == 0);
    CHECK(p1.dim(1, 0) == 0);
    int total = 0;
    for (const auto& [st, c] : ss.e_infinity().cells) total += c.dim;
    CHECK(total == 1);
  }
}

TEST_CASE("page invariants on random filtered simplicial complexes", "[spectral][property]") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 25; ++trial) {
    Simplicial sc = random_filtered_simplicial(rng, 7, 5, 3);
    const FilteredComplex& fc = sc.fc;
    SpectralSequence ss(fc);
    std::vector<Page> pages = ss.pages(5);
    for (std::size_t i = 0; i < pages.size(); ++i) {
      const Page& p = pages[i];
      const int r = p.r;
      for (const auto& [st, m] : p.differential) {
        const auto [s, t] = st;
        auto next = p.differential.find({s - r, t + r - 1});
        if (next != p.differential.end() && m.rows() > 0) CHECK((next->second * m).is_zero());
      }
      if (i + 1 == pages.size()) break;
      for (const auto& [st, c] : p.cells) {
        const auto [s, t] = st;
        const int kernel = c.dim - rank(p.differential.at(st));
        int image = 0;
        auto in = p.differential.find({s + r, t - r + 1});
        if (in != p.differential.end()) image = rank(in->second);
        INFO("trial " << trial << " r " << r << " (" << s << "," << t << ")");
        CHECK(pages[i + 1].dim(s, t) == kernel - image);
      }
    }
    // E-infinity totals against the homology of the whole complex.
    const Page inf = ss.e_infinity();
    for (int n = 0; n <= fc.top_degree(); ++n) {
      int total = 0;
      for (const auto& [st, c] : inf.cells) {
        if (st.first + st.second == n) total += c.dim;
      }
      const int out_rank = n == 0 ? 0 : oracle_rank(sc.dense[n]);
      const int in_rank = n + 1 <= fc.top_degree() ? oracle_rank(sc.dense[n + 1]) : 0;
      INFO("trial " << trial << " degree " << n);
      CHECK(total == fc.dim(n) - out_rank - in_rank);
    }
  }
}

TEST_CASE("graph spectral sequence column zero", "[spectral]") {
  ComplexSpec spec;
  spec.kind = ComplexKind::FilteredC;
  spec.filtration = 1;
  spec.truncation = {4, 0};
  const ChainComplex cx = build_complex(spec);
  const FilteredComplex fc = FilteredComplex::from_chain_complex(cx, 1);
  SpectralSequence ss(fc);
  const Page p1 = ss.page(1);
  CHECK(p1.dim(0, 0) == 2);
  for (int t = 1; t <= 3; ++t) CHECK(p1.dim(0, t) == 0);
  CHECK(p1.cells.at({0, 0}).reliable);
  CHECK_FALSE(p1.cells.at({0, 4}).reliable);
}

TEST_CASE("pushing permanent cycles", "[spectral]") {
  ComplexSpec spec;
  spec.kind = ComplexKind::FilteredC;
  spec.filtration = 2;
  spec.truncation = {3, 0};
  const ChainComplex cx = build_complex(spec);
  const FilteredComplex fc = FilteredComplex::from_chain_complex(cx, 2);
  SpectralSequence ss(fc);
  const int t_idx = cx.basis.find(1, canonical_form(tadpole()).key);
  REQUIRE(t_idx >= 0);
  for (int r = 1; r <= 3; ++r) {
    auto push = ss.locate_and_push({{t_idx, Rational(1)}}, 1, r);
    CHECK(push.s == 1);
    CHECK(push.t == 0);
    CHECK(is_zero_vector(push.image));
    CHECK(push.coordinates.empty());
  }
  const int e_idx = cx.basis.find(0, canonical_form(Graph()).key);
  REQUIRE(e_idx >= 0);
  auto push = ss.locate_and_push({{e_idx, Rational(1)}}, 0, 2);
  CHECK(push.coordinates.empty());
}

TEST_CASE("does-not-survive is reported", "[spectral]") {
  // C_1 = {a (level 1)}, C_0 = {b (level 1)}, da = b: [a] dies on page 1
  // against nothing and d^0 is not computed, so a survives to E^1 only if
  // da lies in F_0, which fails.
  FilteredComplex fc;
  fc.levels = {{1}, {1}};
  fc.boundary = {RationalMatrix(0, 1), RationalMatrix::from_dense({{1}})};
  fc.complete_level = 1;
  SpectralSequence ss(fc);
  CHECK_THROWS_AS(ss.locate_and_push({{0, Rational(1)}}, 1, 1), DoesNotSurvive);
}

TEST_CASE("first page agrees with graded homology", "[spectral]") {
  for (const auto& c : e1_bialgebra_check({4, 0}, 2)) {
    INFO("(" << c.s << "," << c.t << ")");
    CHECK(c.page_dim == c.graded_dim);
  }
}

TEST_CASE("second differential of the three-wheel hits the five-loop", "[spectral]") {
  ComplexSpec spec;
  spec.kind = ComplexKind::FilteredC;
  spec.filtration = 3;
  spec.truncation = {7, 0};
  const ChainComplex cx = build_complex(spec);
  const FilteredComplex fc = FilteredComplex::from_chain_complex(cx, 3);
  SpectralSequence ss(fc);
  const RatVec w3 = cx.coordinates(6, LinComb::of(wheel(3)));
  // d^1 [W3] lands in a zero cell.
  CHECK(ss.locate_and_push(w3, 6, 1).coordinates.empty());
  const auto push = ss.locate_and_push(w3, 6, 2);
  CHECK(push.s == 3);
  CHECK(push.t == 3);
  REQUIRE(ss.cell(2, 1, 4).dim == 1);
  CHECK(ss.cell(2, 1, 4).reliable);
  const auto l5 = ss.locate_and_push(cx.coordinates(5, LinComb::of(loop_graph(5))), 5, 2);
  const auto l5_class = ss.page_coordinates(2, 1, 5, l5.lift);
  REQUIRE(l5_class);
  REQUIRE(l5_class->size() == 1);
  REQUIRE(push.coordinates.size() == 1);
  CHECK(push.coordinates[0].second == 6 * (*l5_class)[0].second);
  CHECK_THROWS_AS(ss.locate_and_push(w3, 6, 3), DoesNotSurvive);
}
