#ifndef GSS_FORMS_HPP
#define GSS_FORMS_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "gss/graph.hpp"
#include "gss/linalg.hpp"

namespace gss {

class NotPositiveDefinite : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A point of the cone of positive definite symmetric g x g matrices.
struct PositiveForm {
  Eigen::MatrixXd matrix;

  int g() const { return static_cast<int>(matrix.rows()); }
  // Throws NotPositiveDefinite unless m is square, symmetric to 1e-12
  // relative, and has a pivoted LDL^T factorization with positive pivots.
  static PositiveForm make(const Eigen::MatrixXd& m);
};

struct FormValue {
  int n = 0;
  double value = 0;
  // n! sqrt(g) prod |X^{-1} V_i|_F bounds the sum of absolute terms; used
  // as the reference for relative tolerances.
  double scale = 0;
};

enum class EvalMode {
  Permutations,  // Kahan-compensated sum over all n! orderings
  Subsets,       // signed products over subsets, one pass per first factor
};

// sum over permutations sigma of sgn(sigma) tr(X^{-1} V_s1 ... X^{-1} V_sn),
// with no factorial normalization. Throws std::invalid_argument on
// dimension mismatch or non-symmetric tangent vectors.
FormValue omega_eval(int n, const PositiveForm& x, const std::vector<Eigen::MatrixXd>& v,
                     EvalMode mode = EvalMode::Subsets);

// The same sum in exact rational arithmetic; x need only be invertible.
using RationalDense = std::vector<std::vector<Rational>>;
Rational omega_eval_exact(int n, const RationalDense& x, const std::vector<RationalDense>& v);

Eigen::MatrixXd random_symmetric(int g, std::mt19937_64& rng);
// A^T A + g I for a Gaussian A, well inside the cone.
PositiveForm random_positive_form(int g, std::mt19937_64& rng);

// Largest relative deviation |w(A^T X A; A^T V A) - w(X; V)| / scale over
// random tangent vectors. Throws std::invalid_argument unless det A = +-1.
double gl_invariance_check(int n, const PositiveForm& x, const Eigen::MatrixXi& a, int trials,
                           std::uint64_t seed);

// Cycle coordinates of the edges: edge e maps to v_e in Z^g, where entry f
// is the coefficient of e in the fundamental cycle of the non-tree edge f.
// Edge orientation runs from edge.u to edge.v.
struct CycleBasis {
  std::vector<EdgeId> tree_edges;
  std::vector<EdgeId> cotree_edges;  // one per basis cycle, in edge order
  std::vector<Eigen::VectorXi> edge_vectors;
};
// Spanning forest of the core vertices; throws GraphError if the core is
// disconnected.
CycleBasis cycle_basis(const Graph& g, const std::vector<EdgeId>& tree = {});
std::vector<std::vector<EdgeId>> spanning_trees(const Graph& g);
// A in GL_g(Z) with b.edge_vectors[e] = A^T a.edge_vectors[e] for all e.
Eigen::MatrixXi basis_change(const CycleBasis& a, const CycleBasis& b);

// X(l) = sum_e l_e v_e v_e^T. Throws std::invalid_argument on a length
// count mismatch or non-positive lengths; the result is positive definite
// whenever the non-bridge edges span, otherwise NotPositiveDefinite.
Eigen::MatrixXd laplacian_matrix(const CycleBasis& basis, const std::vector<double>& lengths);
PositiveForm graph_laplacian(const Graph& g, const std::vector<double>& lengths,
                             const std::vector<EdgeId>& tree = {});

// Pullback of omega^{|E|-1} to the simplex of edge lengths, in the chart
// (l_1, ..., l_{N-1}) with l_N = 1 - sum: the form evaluated on
// M_i - M_N with M_e = v_e v_e^T.
double simplex_integrand(const CycleBasis& basis, const std::vector<double>& lengths);
// |omega(X(l); X(l), M_2, ..., M_{N-1})| / scale: contracting the form with
// the Euler field must vanish for the integrand to descend to the simplex.
double euler_contraction_defect(const CycleBasis& basis, const std::vector<double>& lengths);

struct PairingEstimate {
  int k = 0;
  std::int64_t samples = 0;
  // Integral over {l_i > 0, sum l_i < 1} in the chart above, with the
  // canonical edge order orienting the simplex.
  double estimate = 0;
  double stderr_ = 0;  // batch means
  double ratio_to_zeta = 0;
  double ratio_stderr = 0;
  std::vector<double> batch_means;
  double max_abs_integrand = 0;
  double euler_defect = 0;  // worst value over the first samples
};
constexpr int kPairingBatches = 32;
// Monte Carlo over uniform simplex points; batch b draws from a generator
// seeded by (seed, b), so results do not depend on the thread count.
PairingEstimate wheel_pairing_mc(int k, std::int64_t samples, std::uint64_t seed,
                                 const std::vector<EdgeId>& tree = {}, int threads = 1);

double zeta(int s);

}  // namespace gss

#endif
