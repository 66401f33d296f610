#include "gss/forms.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <thread>

#include "gss/canonical.hpp"

namespace gss {

namespace {

double factorial(int n) {
  double f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Signed sum over orderings, built over subsets: P[S] collects every
// ordering of S with the sign of its permutation relative to sorted order.
double alternating_trace_subsets(const std::vector<Eigen::MatrixXd>& y) {
  const int n = static_cast<int>(y.size());
  const int g = static_cast<int>(y[0].rows());
  std::vector<Eigen::MatrixXd> p(std::size_t{1} << n);
  p[0] = Eigen::MatrixXd::Identity(g, g);
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(g, g);
    for (int j = 0; j < n; ++j) {
      if (!(s >> j & 1)) continue;
      // j goes last, passing the members of s above it.
      const int above = std::popcount(s >> (j + 1));
      const Eigen::MatrixXd term = p[s & ~(1u << j)] * y[j];
      if (above % 2 == 0) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    p[s] = std::move(acc);
  }
  return p[(1u << n) - 1].trace();
}

double alternating_trace_permutations(const std::vector<Eigen::MatrixXd>& y) {
  const int n = static_cast<int>(y.size());
  const int g = static_cast<int>(y[0].rows());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double sum = 0, carry = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    Eigen::MatrixXd prod = Eigen::MatrixXd::Identity(g, g);
    for (int i : perm) prod = prod * y[i];
    const double term = (inversions % 2 == 0 ? 1.0 : -1.0) * prod.trace();
    const double yk = term - carry;
    const double t = sum + yk;
    carry = (t - sum) - yk;
    sum = t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

void require_symmetric(const Eigen::MatrixXd& m, int g) {
  if (m.rows() != g || m.cols() != g) throw std::invalid_argument("tangent vector has the wrong size");
  const double norm = std::max(1.0, m.norm());
  if ((m - m.transpose()).norm() > 1e-12 * norm) throw std::invalid_argument("tangent vector is not symmetric");
}

RationalDense rational_inverse(RationalDense a) {
  const int g = static_cast<int>(a.size());
  RationalDense inv(g, std::vector<Rational>(g, 0));
  for (int i = 0; i < g; ++i) inv[i][i] = 1;
  for (int c = 0; c < g; ++c) {
    int p = c;
    while (p < g && a[p][c] == 0) ++p;
    if (p == g) throw std::invalid_argument("matrix is singular");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const Rational pivot = a[c][c];
    for (int j = 0; j < g; ++j) {
      a[c][j] /= pivot;
      inv[c][j] /= pivot;
    }
    for (int r = 0; r < g; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (int j = 0; j < g; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

RationalDense rational_product(const RationalDense& a, const RationalDense& b) {
  const std::size_t g = a.size();
  RationalDense c(g, std::vector<Rational>(g, 0));
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t k = 0; k < g; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < g; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

std::vector<Eigen::MatrixXd> edge_matrices(const CycleBasis& basis) {
  std::vector<Eigen::MatrixXd> m;
  for (const auto& v : basis.edge_vectors) {
    const Eigen::VectorXd d = v.cast<double>();
    m.push_back(d * d.transpose());
  }
  return m;
}

double integrand_from(const std::vector<Eigen::MatrixXd>& m, const std::vector<double>& lengths,
                      double* scale = nullptr) {
  const int edges = static_cast<int>(m.size());
  const int g = static_cast<int>(m[0].rows());
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(g, g);
  for (int e = 0; e < edges; ++e) x += lengths[e] * m[e];
  const Eigen::LDLT<Eigen::MatrixXd> ldlt(x);
  std::vector<Eigen::MatrixXd> y;
  double norms = 1;
  for (int i = 0; i + 1 < edges; ++i) {
    y.push_back(ldlt.solve(m[i] - m[edges - 1]));
    norms *= y.back().norm();
  }
  if (scale) *scale = factorial(edges - 1) * std::sqrt(static_cast<double>(g)) * norms;
  return alternating_trace_subsets(y);
}

}  // namespace

PositiveForm PositiveForm::make(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols() || m.rows() == 0) throw NotPositiveDefinite("form must be a nonempty square matrix");
  const double norm = m.norm();
  if ((m - m.transpose()).norm() > 1e-12 * norm) throw NotPositiveDefinite("form is not symmetric");
  const Eigen::LDLT<Eigen::MatrixXd> ldlt(m);
  if (ldlt.info() != Eigen::Success || !ldlt.isPositive()) throw NotPositiveDefinite("form is not positive definite");
  const auto d = ldlt.vectorD();
  if (d.minCoeff() <= 1e-14 * d.cwiseAbs().maxCoeff()) throw NotPositiveDefinite("form is singular");
  return PositiveForm{m};
}

FormValue omega_eval(int n, const PositiveForm& x, const std::vector<Eigen::MatrixXd>& v, EvalMode mode) {
  if (n < 1 || static_cast<int>(v.size()) != n) throw std::invalid_argument("need exactly n tangent vectors");
  const int g = x.g();
  for (const auto& m : v) require_symmetric(m, g);
  const Eigen::LDLT<Eigen::MatrixXd> ldlt(x.matrix);
  std::vector<Eigen::MatrixXd> y;
  double norms = 1;
  for (const auto& m : v) {
    y.push_back(ldlt.solve(m));
    norms *= y.back().norm();
  }
  FormValue out;
  out.n = n;
  out.scale = factorial(n) * std::sqrt(static_cast<double>(g)) * norms;
  out.value = mode == EvalMode::Subsets ? alternating_trace_subsets(y) : alternating_trace_permutations(y);
  return out;
}

Rational omega_eval_exact(int n, const RationalDense& x, const std::vector<RationalDense>& v) {
  if (static_cast<int>(v.size()) != n) throw std::invalid_argument("need exactly n tangent vectors");
  const RationalDense inv = rational_inverse(x);
  std::vector<RationalDense> y;
  for (const auto& m : v) {
    if (m.size() != x.size()) throw std::invalid_argument("tangent vector has the wrong size");
    y.push_back(rational_product(inv, m));
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    RationalDense prod = y[perm[0]];
    for (int i = 1; i < n; ++i) prod = rational_product(prod, y[perm[i]]);
    Rational tr = 0;
    for (std::size_t i = 0; i < prod.size(); ++i) tr += prod[i][i];
    total += inversions % 2 == 0 ? tr : Rational(-tr);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Eigen::MatrixXd random_symmetric(int g, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXd a(g, g);
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) a(i, j) = normal(rng);
  }
  return (a + a.transpose()) / 2;
}

PositiveForm random_positive_form(int g, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXd a(g, g);
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) a(i, j) = normal(rng);
  }
  return PositiveForm::make(a.transpose() * a + g * Eigen::MatrixXd::Identity(g, g));
}

double gl_invariance_check(int n, const PositiveForm& x, const Eigen::MatrixXi& a, int trials,
                           std::uint64_t seed) {
  const int g = x.g();
  if (a.rows() != g || a.cols() != g) throw std::invalid_argument("transformation has the wrong size");
  const Eigen::MatrixXd ad = a.cast<double>();
  if (std::abs(std::abs(ad.determinant()) - 1.0) > 1e-9) throw std::invalid_argument("det A must be +-1");
  const PositiveForm xa = PositiveForm::make(ad.transpose() * x.matrix * ad);
  std::mt19937_64 rng(seed);
  double worst = 0;
  for (int t = 0; t < trials; ++t) {
    std::vector<Eigen::MatrixXd> v, va;
    for (int i = 0; i < n; ++i) {
      v.push_back(random_symmetric(g, rng));
      va.push_back(ad.transpose() * v.back() * ad);
    }
    const FormValue w = omega_eval(n, x, v);
    const FormValue wa = omega_eval(n, xa, va);
    worst = std::max(worst, std::abs(w.value - wa.value) / std::max(w.scale, 1e-300));
  }
  return worst;
}

CycleBasis cycle_basis(const Graph& g, const std::vector<EdgeId>& tree) {
  const int n = g.num_core_vertices();
  int comps = 0;
  g.core_components(&comps);
  if (n > 0 && comps != 1) throw GraphError("cycle basis needs a connected core");
  CycleBasis cb;
  std::vector<bool> in_tree(g.num_edges(), false);
  if (tree.empty() && n > 1) {
    // Breadth-first search in edge order.
    std::vector<bool> seen(n, false);
    seen[0] = true;
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int x : frontier) {
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
          const Edge& ed = g.edge(e);
          if (ed.is_loop()) continue;
          int other = -1;
          if (ed.u == x) other = ed.v;
          if (ed.v == x) other = ed.u;
          if (other < 0 || seen[other]) continue;
          seen[other] = true;
          in_tree[e] = true;
          next.push_back(other);
        }
      }
      frontier = std::move(next);
    }
  } else {
    for (EdgeId e : tree) {
      if (e < 0 || e >= g.num_edges()) throw std::invalid_argument("tree edge out of range");
      in_tree[e] = true;
    }
  }
  // Validate: n - 1 edges, no cycles.
  std::vector<int> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int a) { return uf[a] == a ? a : uf[a] = find(uf[a]); };
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!in_tree[e]) continue;
    const Edge& ed = g.edge(e);
    const int a = find(ed.u), b = find(ed.v);
    if (a == b) throw std::invalid_argument("tree edges contain a cycle");
    uf[a] = b;
    cb.tree_edges.push_back(e);
  }
  if (static_cast<int>(cb.tree_edges.size()) != std::max(n - 1, 0)) {
    throw std::invalid_argument("tree edges do not span the core");
  }
  // Root the tree at vertex 0.
  std::vector<int> parent(n, -1), parent_edge(n, -1), depth(n, 0);
  {
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    if (n > 0) seen[0] = true;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (EdgeId e : cb.tree_edges) {
        const Edge& ed = g.edge(e);
        int other = -1;
        if (ed.u == x) other = ed.v;
        if (ed.v == x) other = ed.u;
        if (other < 0 || seen[other]) continue;
        seen[other] = true;
        parent[other] = x;
        parent_edge[other] = e;
        depth[other] = depth[x] + 1;
        stack.push_back(other);
      }
    }
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!in_tree[e]) cb.cotree_edges.push_back(e);
  }
  const int rank = static_cast<int>(cb.cotree_edges.size());
  cb.edge_vectors.assign(g.num_edges(), Eigen::VectorXi::Zero(rank));
  for (int f = 0; f < rank; ++f) {
    const Edge& ed = g.edge(cb.cotree_edges[f]);
    cb.edge_vectors[cb.cotree_edges[f]][f] += 1;
    // Return from ed.v to ed.u through the tree.
    int a = ed.v, b = ed.u;
    std::vector<std::pair<EdgeId, int>> down;
    while (a != b) {
      if (depth[a] >= depth[b]) {
        const Edge& te = g.edge(parent_edge[a]);
        cb.edge_vectors[parent_edge[a]][f] += te.u == a ? 1 : -1;
        a = parent[a];
      } else {
        const Edge& te = g.edge(parent_edge[b]);
        // Traversed from parent[b] down to b.
        down.emplace_back(parent_edge[b], te.u == parent[b] ? 1 : -1);
        b = parent[b];
      }
    }
    for (const auto& [e, s] : down) cb.edge_vectors[e][f] += s;
  }
  return cb;
}

std::vector<std::vector<EdgeId>> spanning_trees(const Graph& g) {
  const int n = g.num_core_vertices();
  const int m = g.num_edges();
  if (m > 30) throw std::invalid_argument("too many edges to enumerate spanning trees");
  std::vector<std::vector<EdgeId>> out;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) != std::max(n - 1, 0)) continue;
    std::vector<int> uf(n);
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int a) { return uf[a] == a ? a : uf[a] = find(uf[a]); };
    bool ok = true;
    std::vector<EdgeId> t;
    for (EdgeId e = 0; e < m && ok; ++e) {
      if (!(mask >> e & 1)) continue;
      const int a = find(g.edge(e).u), b = find(g.edge(e).v);
      if (a == b) ok = false;
      uf[a] = b;
      t.push_back(e);
    }
    if (ok) out.push_back(std::move(t));
  }
  return out;
}

Eigen::MatrixXi basis_change(const CycleBasis& a, const CycleBasis& b) {
  const int edges = static_cast<int>(a.edge_vectors.size());
  if (edges != static_cast<int>(b.edge_vectors.size())) throw std::invalid_argument("bases of different graphs");
  const int g = edges == 0 ? 0 : static_cast<int>(a.edge_vectors[0].size());
  Eigen::MatrixXd za(edges, g), zb(edges, g);
  for (int e = 0; e < edges; ++e) {
    za.row(e) = a.edge_vectors[e].cast<double>().transpose();
    zb.row(e) = b.edge_vectors[e].cast<double>().transpose();
  }
  const Eigen::MatrixXd sol = za.colPivHouseholderQr().solve(zb);
  const Eigen::MatrixXi r = sol.array().round().cast<int>().matrix();
  Eigen::MatrixXi za_i(edges, g), zb_i(edges, g);
  for (int e = 0; e < edges; ++e) {
    za_i.row(e) = a.edge_vectors[e].transpose();
    zb_i.row(e) = b.edge_vectors[e].transpose();
  }
  if (za_i * r != zb_i) throw std::logic_error("cycle bases are not related by an integer matrix");
  if (std::abs(std::abs(r.cast<double>().determinant()) - 1.0) > 1e-9) {
    throw std::logic_error("basis change is not unimodular");
  }
  return r;
}

Eigen::MatrixXd laplacian_matrix(const CycleBasis& basis, const std::vector<double>& lengths) {
  if (lengths.size() != basis.edge_vectors.size()) throw std::invalid_argument("one length per edge");
  const int g = static_cast<int>(basis.cotree_edges.size());
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(g, g);
  for (std::size_t e = 0; e < lengths.size(); ++e) {
    if (!(lengths[e] > 0)) throw std::invalid_argument("edge lengths must be positive");
    const Eigen::VectorXd v = basis.edge_vectors[e].cast<double>();
    x += lengths[e] * v * v.transpose();
  }
  return x;
}

PositiveForm graph_laplacian(const Graph& g, const std::vector<double>& lengths, const std::vector<EdgeId>& tree) {
  return PositiveForm::make(laplacian_matrix(cycle_basis(g, tree), lengths));
}

double simplex_integrand(const CycleBasis& basis, const std::vector<double>& lengths) {
  if (lengths.size() != basis.edge_vectors.size()) throw std::invalid_argument("one length per edge");
  return integrand_from(edge_matrices(basis), lengths);
}

double euler_contraction_defect(const CycleBasis& basis, const std::vector<double>& lengths) {
  const auto m = edge_matrices(basis);
  const int edges = static_cast<int>(m.size());
  const PositiveForm x = PositiveForm::make(laplacian_matrix(basis, lengths));
  std::vector<Eigen::MatrixXd> v{x.matrix};
  for (int i = 1; i + 1 < edges; ++i) v.push_back(m[i] - m[edges - 1]);
  const FormValue w = omega_eval(edges - 1, x, v);
  return std::abs(w.value) / w.scale;
}

double zeta(int s) {
  if (s < 2) throw std::invalid_argument("zeta needs s >= 2");
  // Partial sum with an Euler-Maclaurin tail.
  const int n = 1000;
  double acc = 0;
  for (int k = n; k >= 1; --k) acc += std::pow(k, -s);
  const double nd = n;
  acc += std::pow(nd, 1 - s) / (s - 1) - 0.5 * std::pow(nd, -s) + s / 12.0 * std::pow(nd, -s - 1);
  return acc;
}

PairingEstimate wheel_pairing_mc(int k, std::int64_t samples, std::uint64_t seed, const std::vector<EdgeId>& tree,
                                 int threads) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (samples < kPairingBatches) throw std::invalid_argument("need at least one sample per batch");
  const Graph w = canonical_form(wheel(2 * k + 1)).graph;
  const CycleBasis basis = cycle_basis(w, tree);
  const auto m = edge_matrices(basis);
  const int edges = w.num_edges();

  PairingEstimate out;
  out.k = k;
  out.samples = samples;
  out.batch_means.assign(kPairingBatches, 0.0);
  std::vector<double> batch_max(kPairingBatches, 0.0);
  std::vector<double> batch_defect(kPairingBatches, 0.0);
  std::vector<std::int64_t> batch_size(kPairingBatches, samples / kPairingBatches);
  for (int b = 0; b < samples % kPairingBatches; ++b) ++batch_size[b];

  std::atomic<int> next{0};
  auto worker = [&]() {
    for (int b = next++; b < kPairingBatches; b = next++) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(b)};
      std::mt19937_64 rng(seq);
      std::exponential_distribution<double> expo(1.0);
      std::vector<double> l(edges);
      double sum = 0, carry = 0, worst = 0, defect = 0;
      for (std::int64_t i = 0; i < batch_size[b]; ++i) {
        double total = 0;
        for (double& x : l) total += (x = expo(rng));
        for (double& x : l) x /= total;
        if (i < 16) defect = std::max(defect, euler_contraction_defect(basis, l));
        const double f = integrand_from(m, l);
        worst = std::max(worst, std::abs(f));
        const double yk = f - carry;
        const double t = sum + yk;
        carry = (t - sum) - yk;
        sum = t;
      }
      out.batch_means[b] = sum / static_cast<double>(batch_size[b]);
      batch_max[b] = worst;
      batch_defect[b] = defect;
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::max(threads, 1); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  // The uniform density on the simplex chart is (N-1)!, so the integral is
  // the sample mean divided by (N-1)!.
  const double volume = 1.0 / factorial(edges - 1);
  double mean = 0;
  for (int b = 0; b < kPairingBatches; ++b) mean += out.batch_means[b] * static_cast<double>(batch_size[b]);
  mean /= static_cast<double>(samples);
  double var = 0;
  for (double bm : out.batch_means) var += (bm - mean) * (bm - mean);
  var /= kPairingBatches - 1;
  out.estimate = mean * volume;
  out.stderr_ = std::sqrt(var / kPairingBatches) * volume;
  const double z = zeta(2 * k + 1);
  out.ratio_to_zeta = out.estimate / z;
  out.ratio_stderr = out.stderr_ / z;
  out.max_abs_integrand = *std::max_element(batch_max.begin(), batch_max.end());
  out.euler_defect = *std::max_element(batch_defect.begin(), batch_defect.end());
  return out;
}

}  // namespace gss
