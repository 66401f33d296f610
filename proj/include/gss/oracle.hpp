#ifndef GSS_ORACLE_HPP
#define GSS_ORACLE_HPP

#include <gmpxx.h>

#include <random>
#include <vector>

#include "gss/linalg.hpp"

namespace gss::oracle {

// Dense fraction-free Gaussian elimination (Bareiss), row pivoting only.
inline int bareiss_rank(const std::vector<std::vector<long>>& in) {
  if (in.empty()) return 0;
  const int nr = static_cast<int>(in.size());
  const int nc = static_cast<int>(in[0].size());
  std::vector<std::vector<mpz_class>> a(nr, std::vector<mpz_class>(nc));
  for (int i = 0; i < nr; ++i) {
    for (int j = 0; j < nc; ++j) a[i][j] = in[i][j];
  }
  mpz_class prev = 1;
  int r = 0;
  for (int c = 0; c < nc && r < nr; ++c) {
    int p = -1;
    for (int i = r; i < nr; ++i) {
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(a[p], a[r]);
    for (int i = r + 1; i < nr; ++i) {
      for (int j = c + 1; j < nc; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

// Rows and columns up to max_dim; some rows are combinations of others so
// that rank deficiency is common.
inline std::vector<std::vector<long>> random_sparse(std::mt19937_64& rng, int max_dim, double density) {
  std::uniform_int_distribution<int> dim(1, max_dim);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> val(-3, 3);
  const int nr = dim(rng);
  const int nc = dim(rng);
  std::vector<std::vector<long>> m(nr, std::vector<long>(nc, 0));
  for (int i = 0; i < nr; ++i) {
    if (i >= 2 && u(rng) < 0.3) {
      std::uniform_int_distribution<int> pick(0, i - 1);
      int a = pick(rng);
      int b = pick(rng);
      long ca = val(rng);
      long cb = val(rng);
      for (int j = 0; j < nc; ++j) m[i][j] = ca * m[a][j] + cb * m[b][j];
      continue;
    }
    for (int j = 0; j < nc; ++j) {
      if (u(rng) < density) m[i][j] = val(rng);
    }
  }
  return m;
}

struct Tetrahedron {
  gss::RationalMatrix d1;  // edges -> vertices
  gss::RationalMatrix d2;  // faces -> edges
};

inline Tetrahedron tetrahedron_boundary() {
  // Edges 01 02 03 12 13 23; faces 012 013 023 123.
  Tetrahedron t;
  t.d1 = gss::RationalMatrix::from_dense({{-1, -1, -1, 0, 0, 0},
                                          {1, 0, 0, -1, -1, 0},
                                          {0, 1, 0, 1, 0, -1},
                                          {0, 0, 1, 0, 1, 1}});
  t.d2 = gss::RationalMatrix::from_dense({{1, 1, 0, 0},
                                          {-1, 0, 1, 0},
                                          {0, -1, -1, 0},
                                          {1, 0, 0, 1},
                                          {0, 1, 0, -1},
                                          {0, 0, 1, 1}});
  return t;
}

}  // namespace gss::oracle

#endif
