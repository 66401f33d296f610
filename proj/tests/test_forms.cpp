#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "gss/canonical.hpp"
#include "gss/forms.hpp"

using namespace gss;

namespace {

std::vector<Eigen::MatrixXd> random_tangents(int n, int g, std::mt19937_64& rng) {
  std::vector<Eigen::MatrixXd> v;
  for (int i = 0; i < n; ++i) v.push_back(random_symmetric(g, rng));
  return v;
}

Eigen::MatrixXd block(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  m.topLeftCorner(a.rows(), a.cols()) = a;
  m.bottomRightCorner(b.rows(), b.cols()) = b;
  return m;
}

RationalDense to_rational(const Eigen::MatrixXi& m) {
  RationalDense r(m.rows(), std::vector<Rational>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) r[i][j] = m(i, j);
  }
  return r;
}

Eigen::MatrixXi random_int_symmetric(int g, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  Eigen::MatrixXi a(g, g);
  for (int i = 0; i < g; ++i) {
    for (int j = i; j < g; ++j) a(i, j) = a(j, i) = d(rng);
  }
  return a;
}

}  // namespace

TEST_CASE("positive forms are validated", "[forms]") {
  CHECK_NOTHROW(PositiveForm::make(Eigen::MatrixXd::Identity(3, 3)));
  Eigen::MatrixXd m(2, 2);
  m << 1, 2, 2, 1;
  CHECK_THROWS_AS(PositiveForm::make(m), NotPositiveDefinite);
  m << 1, 0, 1, 1;
  CHECK_THROWS_AS(PositiveForm::make(m), NotPositiveDefinite);
  std::mt19937_64 rng(1);
  const PositiveForm x = random_positive_form(3, rng);
  CHECK_THROWS_AS(omega_eval(2, x, random_tangents(3, 3, rng)), std::invalid_argument);
  CHECK_THROWS_AS(omega_eval(1, x, random_tangents(1, 2, rng)), std::invalid_argument);
}

TEST_CASE("forms vanish outside degrees 1 mod 4", "[forms][property]") {
  std::mt19937_64 rng(20240611);
  for (int n : {2, 3, 4, 6, 7}) {
    for (int g = 1; g <= 4; ++g) {
      for (int trial = 0; trial < 100; ++trial) {
        const PositiveForm x = random_positive_form(g, rng);
        const FormValue w = omega_eval(n, x, random_tangents(n, g, rng));
        INFO("n " << n << " g " << g);
        CHECK(std::abs(w.value) <= 1e-9 * w.scale);
      }
    }
  }
  // omega^5 is generically nonzero at g = 3 and vanishes at g = 2.
  const PositiveForm x3 = random_positive_form(3, rng);
  const FormValue w3 = omega_eval(5, x3, random_tangents(5, 3, rng));
  CHECK(std::abs(w3.value) > 1e-6 * w3.scale);
  for (int trial = 0; trial < 50; ++trial) {
    const FormValue w2 = omega_eval(5, random_positive_form(2, rng), random_tangents(5, 2, rng));
    CHECK(std::abs(w2.value) <= 1e-9 * w2.scale);
  }
}

TEST_CASE("evaluation modes agree with exact arithmetic", "[forms]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    Eigen::MatrixXi a = random_int_symmetric(3, rng);
    const Eigen::MatrixXi xi = a.transpose() * a + 3 * Eigen::MatrixXi::Identity(3, 3);
    std::vector<Eigen::MatrixXi> vi;
    std::vector<Eigen::MatrixXd> vd;
    std::vector<RationalDense> vr;
    for (int i = 0; i < 5; ++i) {
      vi.push_back(random_int_symmetric(3, rng));
      vd.push_back(vi.back().cast<double>());
      vr.push_back(to_rational(vi.back()));
    }
    const PositiveForm x = PositiveForm::make(xi.cast<double>());
    const FormValue fast = omega_eval(5, x, vd, EvalMode::Subsets);
    const FormValue slow = omega_eval(5, x, vd, EvalMode::Permutations);
    const double exact = omega_eval_exact(5, to_rational(xi), vr).get_d();
    CHECK(std::abs(fast.value - slow.value) <= 1e-12 * fast.scale);
    CHECK(std::abs(fast.value - exact) <= 1e-12 * fast.scale);
  }
}

TEST_CASE("forms are alternating", "[forms][property]") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const PositiveForm x = random_positive_form(3, rng);
    auto v = random_tangents(5, 3, rng);
    const FormValue w = omega_eval(5, x, v);
    std::swap(v[1], v[3]);
    const FormValue s = omega_eval(5, x, v);
    CHECK(std::abs(w.value + s.value) <= 1e-12 * w.scale);
  }
}

TEST_CASE("block additivity", "[forms][property]") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const PositiveForm x1 = random_positive_form(3, rng);
    const PositiveForm x2 = random_positive_form(2, rng);
    const PositiveForm x = PositiveForm::make(block(x1.matrix, x2.matrix));
    std::vector<Eigen::MatrixXd> a = random_tangents(5, 3, rng), b = random_tangents(5, 2, rng), v;
    for (int i = 0; i < 5; ++i) v.push_back(block(a[i], b[i]));
    const FormValue w = omega_eval(5, x, v);
    const FormValue w1 = omega_eval(5, x1, a);
    const FormValue w2 = omega_eval(5, x2, b);
    CHECK(std::abs(w.value - w1.value - w2.value) <= 1e-9 * w.scale);
  }
  // Top form of rank 3 on pure-block vectors of a 1 + 2 split vanishes.
  for (int trial = 0; trial < 20; ++trial) {
    const PositiveForm x1 = random_positive_form(1, rng);
    const PositiveForm x2 = random_positive_form(2, rng);
    const PositiveForm x = PositiveForm::make(block(x1.matrix, x2.matrix));
    std::vector<Eigen::MatrixXd> a = random_tangents(5, 1, rng), b = random_tangents(5, 2, rng), v;
    for (int i = 0; i < 5; ++i) v.push_back(block(a[i], b[i]));
    const FormValue w = omega_eval(5, x, v);
    CHECK(std::abs(w.value) <= 1e-9 * w.scale);
  }
}

TEST_CASE("invariance under integral basis change", "[forms][property]") {
  std::mt19937_64 rng(5);
  const PositiveForm x = random_positive_form(3, rng);
  CHECK(gl_invariance_check(5, x, Eigen::MatrixXi::Identity(3, 3), 10, 1) == 0.0);
  Eigen::MatrixXi transvection = Eigen::MatrixXi::Identity(3, 3);
  transvection(0, 2) = 1;
  CHECK(gl_invariance_check(5, x, transvection, 20, 2) < 1e-9);
  Eigen::MatrixXi perm = Eigen::MatrixXi::Zero(3, 3);
  perm(0, 1) = perm(1, 2) = perm(2, 0) = 1;
  CHECK(gl_invariance_check(5, x, perm, 20, 3) < 1e-9);
  Eigen::MatrixXi reflection = Eigen::MatrixXi::Identity(3, 3);
  reflection(1, 1) = -1;
  CHECK(gl_invariance_check(5, x, reflection, 20, 4) < 1e-9);
  Eigen::MatrixXi singular = Eigen::MatrixXi::Identity(3, 3);
  singular(2, 2) = 2;
  CHECK_THROWS_AS(gl_invariance_check(5, x, singular, 1, 5), std::invalid_argument);
}

TEST_CASE("graph Laplacian examples", "[forms]") {
  const PositiveForm t = graph_laplacian(tadpole(), {2.5});
  REQUIRE(t.g() == 1);
  CHECK(t.matrix(0, 0) == 2.5);
  const Graph theta(2, {{0, 1}, {0, 1}, {0, 1}});
  const PositiveForm th = graph_laplacian(theta, {1, 1, 1}, {0});
  Eigen::MatrixXd expected(2, 2);
  expected << 2, 1, 1, 2;
  CHECK(th.matrix == expected);
  const PositiveForm w = graph_laplacian(wheel(3), std::vector<double>(6, 1.0));
  CHECK(w.g() == 3);
  CHECK(w.matrix.determinant() > 0);
  CHECK_THROWS_AS(graph_laplacian(wheel(3), std::vector<double>(6, 0.0)), std::invalid_argument);
  CHECK_THROWS(graph_laplacian(disjoint_union(tadpole(), tadpole()), {1, 1}));
}

TEST_CASE("Laplacians of different spanning trees are related by GL_g(Z)", "[forms][property]") {
  const Graph w = canonical_form(wheel(3)).graph;
  const auto trees = spanning_trees(w);
  CHECK(trees.size() == 16);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.1, 1.0);
  const CycleBasis base = cycle_basis(w, trees[0]);
  for (const auto& t : trees) {
    const CycleBasis other = cycle_basis(w, t);
    const Eigen::MatrixXi a = basis_change(base, other);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<double> l(6);
      double sum = 0;
      for (double& x : l) sum += (x = u(rng));
      for (double& x : l) x /= sum;
      const Eigen::MatrixXd xa = laplacian_matrix(base, l);
      const Eigen::MatrixXd xb = laplacian_matrix(other, l);
      CHECK((a.cast<double>().transpose() * xa * a.cast<double>() - xb).norm() < 1e-12);
      const double fa = simplex_integrand(base, l);
      const double fb = simplex_integrand(other, l);
      CHECK(std::abs(fa - fb) <= 1e-9 * std::max(1.0, std::abs(fa)));
      CHECK(euler_contraction_defect(base, l) < 1e-12);
    }
  }
}

TEST_CASE("wheel pairing sampler is reproducible", "[forms]") {
  const PairingEstimate a = wheel_pairing_mc(1, 3200, 42, {}, 1);
  const PairingEstimate b = wheel_pairing_mc(1, 3200, 42, {}, 2);
  CHECK(a.estimate == b.estimate);
  CHECK(a.stderr_ == b.stderr_);
  CHECK(a.batch_means.size() == 32);
  CHECK(a.euler_defect < 1e-12);
  CHECK(std::abs(zeta(3) - 1.2020569031595942) < 1e-14);
}
