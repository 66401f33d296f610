#ifndef GSS_COMPLEXES_HPP
#define GSS_COMPLEXES_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gss/lincomb.hpp"
#include "gss/linalg.hpp"

namespace gss {

// Edge-ordered boundaries. Edge i carries the sign (-1)^i and the remaining
// edges keep their relative order.
LinComb boundary_c(const Graph& g);
LinComb boundary_d(const Graph& g);
LinComb boundary_full(const Graph& g);  // boundary_c - boundary_d
// Drops tadpole contractions and non-bridge deletions.
LinComb boundary_gr(const Graph& g);

enum class IndecMode { Gr, Full };

// Boundary on indecomposables, written out directly: contractions of edges
// that are neither tadpoles nor bridges to a leaf, and in Full mode minus the
// deletions of edges that are neither tadpoles nor bridges. The degree-0
// generator is the single vertex p, standing for p - 1.
LinComb boundary_indec(const Graph& g, IndecMode mode);

// Projection to indecomposables: isolated vertices erased from graphs with
// edges, products of two graphs with edges dropped, p^k -> k [p], empty -> 0.
LinComb reduce_indecomposable(const LinComb& x);

// boundary_gr with isolated vertices erased from every term.
LinComb boundary_gr_local(const Graph& g);

// Contraction sum with terms that acquire a tadpole dropped.
LinComb boundary_gc2(const Graph& g);

// GrCLocal is Gr(C) with the vertex class inverted and set to 1: graphs
// without isolated vertices, and boundary terms have isolated vertices erased.
enum class ComplexKind { FullC, FilteredC, GrC, GrCmodX, GrCLocal, IndecC, IndecGrC, GC2 };

struct Truncation {
  int max_edges = 5;
  int max_isolated = 0;
};

struct ComplexSpec {
  ComplexKind kind = ComplexKind::FullC;
  Truncation truncation;
  // FilteredC keeps generators with first Betti number at most this.
  int filtration = 0;
  // Keep only this first Betti number; allowed for kinds whose boundary
  // preserves it.
  std::optional<int> b1;
  // Additional bound on the first Betti number for any kind whose boundary
  // does not raise it.
  std::optional<int> max_b1;

  std::string describe() const;
  // Whether graphs may carry isolated vertices.
  bool has_isolated() const;
  // Total vertex bound for kinds with isolated vertices.
  int vertex_cap() const;
};

std::vector<ComplexKind> all_kinds();
std::string kind_name(ComplexKind k);
ComplexKind parse_kind(const std::string& name);

struct GradedBasis {
  // Per degree (= edge count), sorted by (first Betti number, key).
  std::vector<std::vector<Graph>> generators;
  std::vector<std::vector<int>> levels;
  std::vector<std::unordered_map<std::string, int>> index;

  int top_degree() const { return static_cast<int>(generators.size()) - 1; }
  int dim(int d) const;
  // -1 when absent.
  int find(int d, const std::string& key) const;
};

struct ChainComplex {
  ComplexSpec spec;
  GradedBasis basis;
  // boundary[d] maps degree d to degree d-1; boundary[0] has zero rows.
  std::vector<RationalMatrix> boundary;

  LinComb boundary_of(const Graph& g) const;
  // Coordinates of x in degree d; throws if x has terms outside the basis.
  RatVec coordinates(int d, const LinComb& x) const;
  LinComb element(int d, const RatVec& v) const;
  LinComb element(int d, const IntVec& v) const;
};

class TermOutsideBasis : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ChainComplex build_complex(const ComplexSpec& spec, const std::string& cache_dir = "");
// Checks every composite of consecutive boundaries vanishes.
bool boundary_squares_to_zero(const ChainComplex& cx);

struct HomologyResult {
  int degree = 0;
  int dim = 0;
  bool reliable = false;
  std::vector<LinComb> representatives;
};

HomologyResult homology_of(const ChainComplex& cx, int degree);
// Homology in the given degrees, with reliability including the rerun at
// max_isolated + 1 for kinds with isolated vertices.
std::vector<HomologyResult> homology(const ComplexSpec& spec, const std::vector<int>& degrees,
                                     const std::string& cache_dir = "");

}  // namespace gss

#endif
