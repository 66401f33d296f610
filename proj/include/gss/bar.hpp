#ifndef GSS_BAR_HPP
#define GSS_BAR_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gss/series.hpp"
#include "gss/spectral.hpp"

namespace gss {

// beta^{4k_1+1} ^ ... ^ beta^{4k_m+1} with k_1 < ... < k_m, all >= 1. Every
// generator has odd degree, so the exterior algebra is graded commutative.
struct ExteriorWord {
  std::vector<int> indices;

  bool is_unit() const { return indices.empty(); }
  int degree() const;
  // 2 max(k) + 1; the unit has genus 0.
  int genus() const;
  std::string to_string() const;
  auto operator<=>(const ExteriorWord&) const = default;
};

// Sign and product; sign 0 means the product vanishes.
std::pair<int, ExteriorWord> exterior_multiply(const ExteriorWord& a, const ExteriorWord& b);

// [p_1 | ... | p_n] with nonempty letters. A letter contributes its
// exterior degree plus one to the bar degree.
struct BarWord {
  std::vector<ExteriorWord> letters;

  int length() const { return static_cast<int>(letters.size()); }
  int degree() const;
  int genus() const;  // sum of letter genera
  std::string to_string() const;
  auto operator<=>(const BarWord&) const = default;
};

// Integer combinations of bar words with no zero coefficients.
using BarChain = std::map<BarWord, std::int64_t>;
using BarTensor = std::map<std::pair<BarWord, BarWord>, std::int64_t>;

void accumulate(BarChain& c, const BarWord& w, std::int64_t coeff);
void accumulate(BarTensor& t, const BarWord& a, const BarWord& b, std::int64_t coeff);

BarWord bar_letter(std::vector<int> indices);

// Signed shuffles; moving a letter x past a letter y costs
// (-1)^{bar degree x * bar degree y}.
BarChain shuffle_product(const BarWord& u, const BarWord& v);
BarChain shuffle_product(const BarChain& u, const BarChain& v);
// All cuts, including the two with a unit side.
BarTensor deconcatenate(const BarWord& w);
BarTensor deconcatenate(const BarChain& c);
// sum_{i=1}^{n-1} (-1)^i [s p_1 | ... | s p_{i-1} | s p_i ^ p_{i+1} | p_{i+2} | ... | p_n]
// with s multiplying by (-1)^{exterior degree}.
BarChain d_internal(const BarWord& w);
BarChain d_internal(const BarChain& c);

// Letters with exterior indices <= max_index, in a fixed order.
std::vector<ExteriorWord> exterior_letters(int max_index);
// Words of length <= max_length over those letters.
std::vector<BarWord> bar_words(int max_length, int max_index);
// Every bar word of bar degree exactly n (bar degree bounds the indices).
std::vector<BarWord> bar_words_of_degree(int n);

// Exhaustive algebraic checks; each returns the number of failures.
int d_squared_failures(int max_length, int max_index);
int shuffle_commutativity_failures(int max_length, int max_index);
int coassociativity_failures(int max_length, int max_index);
// d(u * v) = d(u) * v + (-1)^{|u|} u * d(v) with |u| the bar degree.
int derivation_failures(int max_length, int max_index);
// Delta d = (d (x) 1 + 1 (x) d) Delta with (1 (x) d)(a (x) b) = (-1)^{|a|} a (x) d b.
int coderivation_failures(int max_length, int max_index);
// Every term of d(w) has genus below genus(w), and G_g ^ G_h lies in G_max(g,h).
int genus_filtration_failures(int max_length, int max_index);

// The bar complex in degrees 0..max_degree, filtered by genus. The basis in
// each degree is sorted by genus.
struct BarComplex {
  std::vector<std::vector<BarWord>> basis;
  FilteredComplex filtered;

  int find(int degree, const BarWord& w) const;
  RatVec coordinates(int degree, const BarChain& c) const;
};
BarComplex build_bar_complex(int max_degree);

// Pages 1..r_max of the genus spectral sequence in degrees <= max_degree.
std::vector<Page> canonical_pages(const BarComplex& bc, int r_max, int max_degree);

// Polynomial algebra on beta^{4k+1} placed in genus 2k+1, degree 4k+2.
BivariateSeries expected_abutment(int max_genus, int max_degree);

struct KoszulRow {
  int genus = -1;  // -1 for the total over all genera
  int degree = 0;
  int computed = 0;
  int expected = 0;
};
struct KoszulReport {
  // Total homology of (B, d_I) per degree, then E^infinity per bidegree.
  std::vector<KoszulRow> rows;
  bool agrees() const;
};
KoszulReport koszul_homology_check(int max_degree, int max_genus);

}  // namespace gss

#endif
