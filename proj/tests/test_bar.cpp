#include <catch_amalgamated.hpp>

#include "gss/bar.hpp"

using namespace gss;

namespace {

ExteriorWord ext(std::vector<int> k) { return ExteriorWord{std::move(k)}; }

BarWord word(std::vector<std::vector<int>> letters) {
  BarWord w;
  for (auto& l : letters) w.letters.push_back(ext(std::move(l)));
  return w;
}

}  // namespace

TEST_CASE("exterior products", "[bar]") {
  CHECK(exterior_multiply(ext({1}), ext({1})).first == 0);
  const auto [s, w] = exterior_multiply(ext({2}), ext({1}));
  CHECK(s == -1);
  CHECK(w == ext({1, 2}));
  const auto [u, x] = exterior_multiply(ext({}), ext({1}));
  CHECK(u == 1);
  CHECK(x == ext({1}));
  CHECK(ext({1, 2}).degree() == 14);
  CHECK(ext({1, 3}).genus() == 7);
}

TEST_CASE("bar word gradings", "[bar]") {
  const BarWord w = word({{1}, {2}});
  CHECK(w.degree() == 16);
  CHECK(w.genus() == 8);
  CHECK(word({{1, 2}}).degree() == 15);
  CHECK(word({{1, 2}}).genus() == 5);
}

TEST_CASE("shuffle product examples", "[bar]") {
  const BarChain p = shuffle_product(word({{1}}), word({{2}}));
  CHECK(p == BarChain{{word({{1}, {2}}), 1}, {word({{2}, {1}}), 1}});
  const BarWord w = word({{1}, {1, 2}});
  CHECK(shuffle_product(BarWord{}, w) == BarChain{{w, 1}});
  // Odd bar degree letters anticommute: [b5^b9] has bar degree 15.
  const BarChain q = shuffle_product(word({{1, 2}}), word({{1, 2}}));
  CHECK(q.empty());
}

TEST_CASE("deconcatenation examples", "[bar]") {
  CHECK(deconcatenate(word({{1}})) ==
        BarTensor{{{BarWord{}, word({{1}})}, 1}, {{word({{1}}), BarWord{}}, 1}});
  CHECK(deconcatenate(word({{1}, {2}})) == BarTensor{{{BarWord{}, word({{1}, {2}})}, 1},
                                                     {{word({{1}}), word({{2}})}, 1},
                                                     {{word({{1}, {2}}), BarWord{}}, 1}});
}

TEST_CASE("internal differential examples", "[bar]") {
  CHECK(d_internal(word({{1}})).empty());
  CHECK(d_internal(word({{1}, {2}})) == BarChain{{word({{1, 2}}), 1}});
  CHECK(d_internal(word({{2}, {1}})) == BarChain{{word({{1, 2}}), -1}});
  CHECK(d_internal(word({{1}, {1}})).empty());
}

TEST_CASE("bar construction axioms", "[bar][property]") {
  CHECK(d_squared_failures(4, 3) == 0);
  CHECK(shuffle_commutativity_failures(2, 3) == 0);
  CHECK(coassociativity_failures(3, 3) == 0);
  CHECK(derivation_failures(3, 3) == 0);
  CHECK(coderivation_failures(3, 3) == 0);
  CHECK(genus_filtration_failures(3, 3) == 0);
}

TEST_CASE("genus spectral sequence of the bar complex", "[bar]") {
  const BarComplex bc = build_bar_complex(17);
  const auto pages = canonical_pages(bc, 3, 16);
  for (int r = 0; r < 2; ++r) {
    for (const auto& [st, m] : pages[r].differential) {
      INFO("r " << r + 1 << " (" << st.first << "," << st.second << ")");
      CHECK(m.is_zero());
    }
  }
  // The generators are permanent cycles.
  SpectralSequence ss(bc.filtered);
  for (int k = 1; 4 * k + 2 <= 16; ++k) {
    const BarWord b = word({{k}});
    const int n = b.degree();
    const RatVec x = bc.coordinates(n, BarChain{{b, 1}});
    for (int r = 1; r <= 8; ++r) CHECK(ss.locate_and_push(x, n, r).coordinates.empty());
  }
  // d^3 sends the antisymmetric word of genus 8 to twice [b5^b9] in genus 5.
  const BarChain anti{{word({{1}, {2}}), 1}, {word({{2}, {1}}), -1}};
  const auto push = ss.locate_and_push(bc.coordinates(16, anti), 16, 3);
  CHECK(push.s == 8);
  REQUIRE(push.coordinates.size() == 1);
  const auto target = ss.page_coordinates(3, 5, 15, bc.coordinates(15, BarChain{{word({{1, 2}}), 1}}));
  REQUIRE(target);
  REQUIRE(target->size() == 1);
  CHECK(push.coordinates[0].second == 2 * (*target)[0].second);
}

TEST_CASE("Koszul abutment", "[bar]") {
  const KoszulReport rep = koszul_homology_check(16, 7);
  for (const auto& row : rep.rows) {
    INFO("genus " << row.genus << " degree " << row.degree);
    CHECK(row.computed == row.expected);
  }
  CHECK(rep.agrees());
  auto total = [&](int n) {
    for (const auto& r : rep.rows) {
      if (r.genus == -1 && r.degree == n) return r.computed;
    }
    return -1;
  };
  CHECK(total(6) == 1);
  CHECK(total(11) == 0);
  for (const auto& r : rep.rows) {
    if (r.genus == 6 && r.degree == 12) CHECK(r.computed == 1);
  }
}
