#ifndef GSS_SPECTRAL_HPP
#define GSS_SPECTRAL_HPP

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gss/complexes.hpp"
#include "gss/linalg.hpp"

namespace gss {

// A chain complex with an increasing filtration. In every degree the
// generators are sorted by level, so F_s is a prefix of the basis.
struct FilteredComplex {
  std::vector<std::vector<int>> levels;  // per degree, nondecreasing
  std::vector<RationalMatrix> boundary;  // boundary[d]: C_d -> C_{d-1}
  // Levels up to this value are fully present; higher ones may be missing.
  int complete_level = 0;
  // Outcome of the isolated-vertex stabilization, when it applies.
  bool stabilized = true;

  int top_degree() const { return static_cast<int>(levels.size()) - 1; }
  int dim(int d) const;
  // Number of degree-d generators with level <= s.
  int prefix(int d, int s) const;
  int min_level() const;
  int max_level() const;

  // Throws std::invalid_argument if levels are unsorted or the boundary
  // raises the filtration.
  void validate() const;

  // Levels are first Betti numbers; the basis order of build_complex
  // already sorts by them.
  static FilteredComplex from_chain_complex(const ChainComplex& cx, int complete_level);
};

// Cell (s, t) of page r: E^r_{s,t} in degree n = s + t.
struct PageCell {
  int dim = 0;
  bool reliable = false;
  // Chains in Z^r_s spanning a complement of the denominator.
  std::vector<IntVec> representatives;
};

struct Page {
  int r = 1;
  std::map<std::pair<int, int>, PageCell> cells;
  // d^r from cell (s, t) to (s - r, t + r - 1); columns are source
  // representatives, rows target representatives.
  std::map<std::pair<int, int>, RationalMatrix> differential;

  int dim(int s, int t) const;
};

class DoesNotSurvive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact spectral sequence of a filtered complex, with
// E^r_s = Z^r_s / (Z^{r-1}_{s-1} + d Z^{r-1}_{s+r-1}) and
// Z^r_s = F_s intersected with the preimage of F_{s-r}.
class SpectralSequence {
 public:
  explicit SpectralSequence(const FilteredComplex& fc);

  const FilteredComplex& complex() const { return fc_; }

  // Basis of Z^r_s in degree n, as vectors in C_n.
  const std::vector<IntVec>& cycles(int r, int s, int n);
  // Spanning set of the denominator of E^r_s in degree n.
  std::vector<IntVec> denominator(int r, int s, int n);

  PageCell cell(int r, int s, int t);
  Page page(int r, int max_degree = -1);
  // Pages 1..r_max.
  std::vector<Page> pages(int r_max, int max_degree = -1);
  // Page after which every differential vanishes for the present levels.
  Page e_infinity(int max_degree = -1);

  // Coordinates of a chain y in Z^r_s (degree n) on the representatives of
  // cell (s, n - s); nullopt when y is not in Z^r_s plus the denominator.
  std::optional<RatVec> page_coordinates(int r, int s, int n, const RatVec& y);

  struct Push {
    int s = 0, t = 0;      // bidegree of x
    RatVec lift;           // x + z with z in F_{s-1}, lying in Z^r_s
    RatVec image;          // d(lift), a chain in Z^r_{s-r} of degree n - 1
    RatVec coordinates;    // d^r[x] on the representatives of (s - r, t + r - 1)
  };
  // d^r applied to the class of x in degree n. The level s is the highest
  // level in the support of x. Throws DoesNotSurvive when no correction
  // in F_{s-1} brings x into Z^r_s.
  Push locate_and_push(const RatVec& x, int n, int r);

  bool reliable(int r, int s, int n) const;

 private:
  struct CellBasis {
    EchelonBasis basis;  // denominator untagged, representatives tagged
    std::vector<IntVec> representatives;
  };
  const CellBasis& cell_basis(int r, int s, int n);

  const FilteredComplex& fc_;
  std::map<std::tuple<int, int, int>, std::vector<IntVec>> cycles_;
  std::map<std::tuple<int, int, int>, CellBasis> cells_;
};

// E^1 dims from the filtered full complex compared with the homology of the
// graded complex GrC per bidegree with s + t <= max_edges - 1.
struct E1Comparison {
  int s = 0, t = 0;
  int page_dim = 0;
  int graded_dim = 0;
};
std::vector<E1Comparison> e1_bialgebra_check(const Truncation& tr, int max_level,
                                             const std::string& cache_dir = "");

}  // namespace gss

#endif
