#ifndef GSS_HOPF_HPP
#define GSS_HOPF_HPP

#include <array>
#include <functional>
#include <map>
#include <string>

#include "gss/lincomb.hpp"

namespace gss {

using BoundaryFn = std::function<LinComb(const Graph&)>;

// Disjoint union with the edge order of x followed by that of y.
LinComb product(const Graph& x, const Graph& y);
LinComb product(const LinComb& x, const LinComb& y);

// Sum over edge subsets gamma of sign * [G|gamma] (x) [G/gamma], where sign
// is that of the shuffle moving gamma before the remaining edges.
TensorLinComb coproduct(const Graph& ordered);
TensorLinComb coproduct(const LinComb& x);

// Sign of the shuffle placing the edges selected by mask first.
int shuffle_sign(int num_edges, std::uint64_t mask);

// (a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd with degree = edge count.
TensorLinComb tensor_product(const TensorLinComb& a, const TensorLinComb& b);
// (d (x) 1 + 1 (x) d) with the sign (-1)^{|a|} on the right factor.
TensorLinComb tensor_boundary(const TensorLinComb& x, const BoundaryFn& d);
// tau(a (x) b) = (-1)^{|a||b|} b (x) a.
TensorLinComb twist(const TensorLinComb& x);

// 1 on edgeless graphs, 0 otherwise.
int counit(const Graph& g);

// Inverts the grouplike vertex class and sets it to 1: isolated vertices
// are erased, so p^k becomes the empty graph.
LinComb localize(const LinComb& x);
TensorLinComb localize(const TensorLinComb& x);

// Localized coproduct minus 1 (x) L(x) and L(x) (x) 1.
TensorLinComb reduced_coproduct_localized(const LinComb& x);
bool is_primitive_localized(const LinComb& x);

// Whether a cycle of the tensor square of the localized graded complex
// (GrCLocal) is a boundary. Right factors are paired with cocycles of their
// bidegree; every resulting left chain must be a boundary. Throws
// std::invalid_argument when e is not a cycle.
bool vanishes_in_homology(const TensorLinComb& e, const std::string& cache_dir = "",
                          int threads = 1);

struct PrimitivityReport {
  TensorLinComb residual;  // localized reduced coproduct
  bool chain_level = false;
  bool homology_level = false;
};
// Chain-level and homology-level primitivity of a cycle of GrCLocal.
PrimitivityReport primitivity_report(const LinComb& x, const std::string& cache_dir = "",
                                     int threads = 1);

// Localized coproduct with unit terms dropped, minus its twist.
TensorLinComb cobracket(const LinComb& x);
// Left factors of the terms of t whose right factor is the given graph.
LinComb right_component(const TensorLinComb& t, const Graph& right);

// Axiom checks on single generators.
bool compatibility_check(const Graph& x, const Graph& y);
bool coassociativity_check(const Graph& g);
bool counit_check(const Graph& g);
bool filtration_additivity_check(const Graph& g);
bool chain_map_check(const Graph& g, const BoundaryFn& d);
bool graded_commutativity_check(const Graph& x, const Graph& y);

}  // namespace gss

#endif
