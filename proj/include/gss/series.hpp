#ifndef GSS_SERIES_HPP
#define GSS_SERIES_HPP

#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace gss {

class MismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Power series in s (genus) and t (degree) with int64 coefficients,
// truncated to genus <= max_genus and degree <= max_degree. Arithmetic
// throws std::overflow_error instead of wrapping.
class BivariateSeries {
 public:
  BivariateSeries() = default;
  BivariateSeries(int max_genus, int max_degree);
  static BivariateSeries one(int max_genus, int max_degree);

  int max_genus() const { return max_genus_; }
  int max_degree() const { return max_degree_; }
  // Zero outside the truncation.
  std::int64_t at(int g, int n) const;
  void set(int g, int n, std::int64_t v);
  void add(int g, int n, std::int64_t v);

  BivariateSeries operator+(const BivariateSeries& o) const;
  BivariateSeries operator-(const BivariateSeries& o) const;
  BivariateSeries operator*(const BivariateSeries& o) const;
  // Requires a unit constant term of 1.
  BivariateSeries inverse() const;
  bool operator==(const BivariateSeries& o) const;

  // "genus,degree,dim" rows for the nonzero coefficients, after a header.
  std::string to_csv() const;

 private:
  int max_genus_ = 0;
  int max_degree_ = 0;
  std::vector<std::int64_t> c_;
};

using Polynomial = std::vector<std::int64_t>;  // index = exponent

// t^{4k+2} prod_{i=1}^{k-1} (1 + t^{4i+1}), truncated at t^max_degree.
Polynomial f_poly(int k, int max_degree);
// Evaluation at an integer point, exact.
std::int64_t evaluate(const Polynomial& p, std::int64_t x);

// Genus/degree series of the tensor algebra on the shifted canonical
// forms: 1 / (1 - sum_k f_{2k+1}(t) s^{2k+1}).
BivariateSeries tensor_series(int max_genus, int max_degree);
// Coefficients of s^g in P(s, -1), for g <= max_genus. Uses a degree
// window wide enough to hold every term of genus <= max_genus.
std::vector<std::int64_t> euler_characteristics(int max_genus);

// Diagonal tensor algebra on one generator in each bidegree (2k+1, 4k+2),
// expanded as the geometric series and as the closed rational form.
struct DiagonalSeries {
  BivariateSeries geometric;
  BivariateSeries closed_form;
};
// Throws MismatchError if the two expansions differ.
DiagonalSeries diagonal_series(int max_genus);
// Coefficients of u^n in 1/(1 - u^3 - u^5 - ...), n <= max_n.
std::vector<std::int64_t> diagonal_counts(int max_n);

// Root in (0, 1) of the increasing function p(s) - 1, by bisection.
double bisect_unit_root(const std::function<double(double)>& p, double tol = 1e-12);
// Real root of s^3 + s^2 - 1.
double growth_root();
// Real root of s^23 + s^21 + ... + s^3 - 1.
double growth_root_approx();

// omega^{4k_1+1} ^ ... ^ omega^{4k_r+1} with k_1 < ... < k_r, all >= 1.
struct OmegaWord {
  std::vector<int> indices;
  bool shifted = true;

  int genus() const;
  int degree() const;
  std::string to_string() const;
  bool operator==(const OmegaWord&) const = default;
};
std::vector<OmegaWord> omega_basis(int genus, int degree, bool shifted);

struct BigradedGenerator {
  int genus = 0;
  int degree = 0;
  bool odd = false;
};
enum class AlgebraKind { Tensor, Sym, FreeLie };
// Dimensions of the tensor algebra, the free graded-commutative algebra or
// the free graded Lie algebra on the generators. Generator genera must be
// positive; parities must match degrees mod 2 for FreeLie.
BivariateSeries pbw_dims(const std::vector<BigradedGenerator>& gens, AlgebraKind kind,
                         int max_genus, int max_degree);
// Sym-type product over a graded space with the given dims:
// prod (1 - s^g t^n)^{-d} for even n and (1 + s^g t^n)^d for odd n.
BivariateSeries sym_of(const BivariateSeries& dims);

// Basis words of the shifted canonical forms as generators, up to genus
// max_genus: degree sum(4k_i+1)+1, genus 2k_r+1, parity from the degree.
std::vector<BigradedGenerator> omega_generators(int max_genus);
// The degree-one class of genus one that is adjoined to the forms.
BigradedGenerator epsilon_generator();
// Monomials in the wheel classes W_g (genus g, degree 2g, g odd >= 3)
// times Q[x]/x^2 with x in (1, 1).
BivariateSeries wheel_monomial_counts(int max_genus, int max_degree);

struct ExceptionalSets {
  std::set<int> representable;  // within [0, bound]
  std::set<int> s_a;
  std::set<int> s_sl;
  int bound = 0;
};
// Sums of distinct integers >= 5 that are 1 mod 4.
bool is_representable(int k);
// Derives both sets; with check, throws MismatchError unless they equal
// the quoted values.
ExceptionalSets exceptional_sets(bool check = true);
const std::set<int>& quoted_s_a();
const std::set<int>& quoted_s_sl();

// Lyndon words with their standard bracketing, a Hall basis of the free
// Lie algebra. Letters are 0..num_generators-1, printed as x, y, z, ...
struct HallElement {
  std::vector<int> word;
  std::string bracket;
};
std::vector<HallElement> hall_basis(int num_generators, int max_length);
// Witt's necklace count of the length-n part.
std::int64_t witt_number(int num_generators, int n);

}  // namespace gss

#endif
