#include "gss/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>

namespace gss {

namespace {

// a*x - b*y
IntVec combine(const Integer& a, const IntVec& x, const Integer& b, const IntVec& y) {
  IntVec out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -b * y[j].second);
      ++j;
    } else {
      Integer v = a * x[i].second - b * y[j].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

// a*x + b*y
IntVec add_scaled(const Integer& a, const IntVec& x, const Integer& b, const IntVec& y) {
  Integer nb = -b;
  return combine(a, x, nb, y);
}

Integer content(const IntVec& v) {
  Integer g = 0;
  for (const auto& [i, x] : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void divide_exact(IntVec& v, const Integer& g) {
  for (auto& [i, x] : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

const Integer* find_entry(const IntVec& v, int index) {
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const auto& e, int k) { return e.first < k; });
  if (it == v.end() || it->first != index) return nullptr;
  return &it->second;
}

// Integral columns of S*m for a diagonal row scaling S.
std::vector<IntVec> integral_columns(const RationalMatrix& m) {
  std::vector<Integer> scale(m.rows(), 1);
  for (int c = 0; c < m.cols(); ++c) {
    for (const auto& [r, q] : m.column(c)) {
      mpz_lcm(scale[r].get_mpz_t(), scale[r].get_mpz_t(), q.get_den_mpz_t());
    }
  }
  std::vector<IntVec> cols(m.cols());
  for (int c = 0; c < m.cols(); ++c) {
    for (const auto& [r, q] : m.column(c)) {
      Integer v = scale[r] / q.get_den();
      v *= q.get_num();
      cols[c].emplace_back(r, std::move(v));
    }
  }
  return cols;
}

struct ColumnReduction {
  std::vector<IntVec> kernel;
  std::vector<IntVec> image;
};

ColumnReduction column_reduce(const RationalMatrix& m, bool want_kernel) {
  std::vector<IntVec> cols = integral_columns(m);
  std::vector<int> owner(m.rows(), -1);
  std::vector<IntVec> reduced(m.cols());
  std::vector<IntVec> track(m.cols());
  ColumnReduction out;
  for (int j = 0; j < m.cols(); ++j) {
    IntVec r = std::move(cols[j]);
    IntVec v;
    if (want_kernel) v.emplace_back(j, Integer(1));
    while (!r.empty()) {
      int low = r.back().first;
      int k = owner[low];
      if (k < 0) break;
      Integer a = reduced[k].back().second;
      Integer b = r.back().second;
      Integer g = gcd(a, b);
      a /= g;
      b /= g;
      r = combine(a, r, b, reduced[k]);
      if (want_kernel) v = combine(a, v, b, track[k]);
      Integer c = content(r);
      if (want_kernel) {
        Integer cv = content(v);
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cv.get_mpz_t());
      }
      if (c > 1) {
        divide_exact(r, c);
        if (want_kernel) divide_exact(v, c);
      }
    }
    if (r.empty()) {
      if (want_kernel) {
        Integer c = content(v);
        if (c > 1) divide_exact(v, c);
        out.kernel.push_back(std::move(v));
      }
    } else {
      owner[r.back().first] = j;
      out.image.push_back(r);
      reduced[j] = std::move(r);
      if (want_kernel) track[j] = std::move(v);
    }
  }
  return out;
}

}  // namespace

RationalMatrix RationalMatrix::from_triplets(int rows, int cols,
                                             const std::vector<std::tuple<int, int, Rational>>& t) {
  std::vector<std::map<int, Rational>> acc(cols);
  for (const auto& [r, c, q] : t) {
    if (r < 0 || r >= rows || c < 0 || c >= cols) throw std::out_of_range("matrix index");
    acc[c][r] += q;
  }
  RationalMatrix m(rows, cols);
  for (int c = 0; c < cols; ++c) {
    for (auto& [r, q] : acc[c]) {
      if (q != 0) m.columns_[c].emplace_back(r, q);
    }
  }
  return m;
}

RationalMatrix RationalMatrix::from_columns(int rows, std::vector<RatVec> columns) {
  RationalMatrix m(rows, static_cast<int>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& [r, q] : columns[c]) {
      if (r < 0 || r >= rows) throw std::out_of_range("matrix index");
    }
    std::sort(columns[c].begin(), columns[c].end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    RatVec clean;
    for (auto& e : columns[c]) {
      if (!clean.empty() && clean.back().first == e.first) {
        clean.back().second += e.second;
      } else {
        clean.push_back(std::move(e));
      }
    }
    std::erase_if(clean, [](const auto& e) { return e.second == 0; });
    m.columns_[c] = std::move(clean);
  }
  return m;
}

RationalMatrix RationalMatrix::from_dense(const std::vector<std::vector<long>>& rows) {
  const int nr = static_cast<int>(rows.size());
  const int nc = nr ? static_cast<int>(rows[0].size()) : 0;
  std::vector<std::tuple<int, int, Rational>> t;
  for (int r = 0; r < nr; ++r) {
    for (int c = 0; c < nc; ++c) {
      if (rows[r][c] != 0) t.emplace_back(r, c, Rational(rows[r][c]));
    }
  }
  return from_triplets(nr, nc, t);
}

std::size_t RationalMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

Rational RationalMatrix::entry(int r, int c) const {
  for (const auto& [i, q] : columns_.at(c)) {
    if (i == r) return q;
  }
  return 0;
}

RatVec RationalMatrix::apply(const RatVec& x) const {
  std::map<int, Rational> acc;
  for (const auto& [c, xc] : x) {
    for (const auto& [r, q] : columns_.at(c)) acc[r] += q * xc;
  }
  RatVec out;
  for (auto& [r, q] : acc) {
    if (q != 0) out.emplace_back(r, q);
  }
  return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  RationalMatrix m(rows_, other.cols_);
  for (int c = 0; c < other.cols_; ++c) m.columns_[c] = apply(other.columns_[c]);
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  std::vector<std::tuple<int, int, Rational>> t;
  for (int c = 0; c < cols_; ++c) {
    for (const auto& [r, q] : columns_[c]) t.emplace_back(c, r, q);
  }
  return from_triplets(cols_, rows_, t);
}

RationalMatrix RationalMatrix::block(int r0, int r1, int c0, int c1) const {
  if (r0 < 0 || r1 > rows_ || r0 > r1 || c0 < 0 || c1 > cols_ || c0 > c1) {
    throw std::out_of_range("matrix block");
  }
  RationalMatrix m(r1 - r0, c1 - c0);
  for (int c = c0; c < c1; ++c) {
    for (const auto& [r, q] : columns_[c]) {
      if (r >= r0 && r < r1) m.columns_[c - c0].emplace_back(r - r0, q);
    }
  }
  return m;
}

void RationalMatrix::dump(std::ostream& os) const {
  os << rows_ << ' ' << cols_ << ' ' << nnz() << '\n';
  for (int c = 0; c < cols_; ++c) {
    for (const auto& [r, q] : columns_[c]) {
      os << r << ' ' << c << ' ' << q.get_num() << '/' << q.get_den() << '\n';
    }
  }
}

IntVec primitive(const RatVec& v) {
  Integer l = 1;
  for (const auto& [i, q] : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  IntVec out;
  out.reserve(v.size());
  for (const auto& [i, q] : v) {
    if (q == 0) continue;
    Integer x = l / q.get_den();
    x *= q.get_num();
    out.emplace_back(i, std::move(x));
  }
  Integer c = content(out);
  if (c > 1) divide_exact(out, c);
  return out;
}

RatVec to_rational(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (const auto& [i, x] : v) out.emplace_back(i, Rational(x));
  return out;
}

IntVec to_integer(const RatVec& v) {
  IntVec out;
  out.reserve(v.size());
  for (const auto& [i, q] : v) {
    if (q.get_den() != 1) throw std::invalid_argument("non-integral entry");
    if (q != 0) out.emplace_back(i, q.get_num());
  }
  return out;
}

bool is_zero_vector(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const auto& e) { return e.second == 0; });
}

int rank(const RationalMatrix& m, int threads) {
  const int nr = m.rows();
  const int nc = m.cols();
  std::vector<IntVec> rows(nr);
  {
    std::vector<IntVec> cols = integral_columns(m);
    for (int c = 0; c < nc; ++c) {
      for (auto& [r, x] : cols[c]) rows[r].emplace_back(c, std::move(x));
    }
  }
  std::vector<std::set<int>> col_rows(nc);
  for (int r = 0; r < nr; ++r) {
    for (const auto& [c, x] : rows[r]) col_rows[c].insert(r);
  }
  std::set<std::pair<int, int>> bucket;  // (count, col)
  for (int c = 0; c < nc; ++c) {
    if (!col_rows[c].empty()) bucket.insert({static_cast<int>(col_rows[c].size()), c});
  }
  auto set_count = [&](int c, int before) {
    int after = static_cast<int>(col_rows[c].size());
    if (before == after) return;
    if (before > 0) bucket.erase({before, c});
    if (after > 0) bucket.insert({after, c});
  };

  int rk = 0;
  while (!bucket.empty()) {
    const int minc = bucket.begin()->first;
    long best_cost = -1;
    int pr = -1;
    int pc = -1;
    for (auto it = bucket.begin(); it != bucket.end() && it->first == minc; ++it) {
      const int c = it->second;
      for (int r : col_rows[c]) {
        long cost = static_cast<long>(rows[r].size() - 1) * (minc - 1);
        if (best_cost < 0 || cost < best_cost || (cost == best_cost && std::pair(r, c) < std::pair(pr, pc))) {
          best_cost = cost;
          pr = r;
          pc = c;
        }
      }
    }
    ++rk;
    const IntVec pivot_row = rows[pr];
    const Integer a = *find_entry(pivot_row, pc);
    std::vector<int> targets;
    for (int r : col_rows[pc]) {
      if (r != pr) targets.push_back(r);
    }
    std::vector<IntVec> updated(targets.size());
    auto work = [&](std::size_t begin, std::size_t end) {
      for (std::size_t k = begin; k < end; ++k) {
        const IntVec& row = rows[targets[k]];
        Integer b = *find_entry(row, pc);
        Integer g = gcd(a, b);
        IntVec nrow = combine(a / g, row, b / g, pivot_row);
        Integer c = content(nrow);
        if (c > 1) divide_exact(nrow, c);
        updated[k] = std::move(nrow);
      }
    };
    if (threads > 1 && targets.size() >= 64) {
      std::vector<std::thread> pool;
      const std::size_t chunk = (targets.size() + threads - 1) / threads;
      for (std::size_t s = 0; s < targets.size(); s += chunk) {
        pool.emplace_back(work, s, std::min(targets.size(), s + chunk));
      }
      for (auto& t : pool) t.join();
    } else {
      work(0, targets.size());
    }
    for (std::size_t k = 0; k < targets.size(); ++k) {
      const int r = targets[k];
      for (const auto& [c, x] : rows[r]) {
        int before = static_cast<int>(col_rows[c].size());
        col_rows[c].erase(r);
        set_count(c, before);
      }
      rows[r] = std::move(updated[k]);
      for (const auto& [c, x] : rows[r]) {
        int before = static_cast<int>(col_rows[c].size());
        col_rows[c].insert(r);
        set_count(c, before);
      }
    }
    for (const auto& [c, x] : rows[pr]) {
      int before = static_cast<int>(col_rows[c].size());
      col_rows[c].erase(pr);
      set_count(c, before);
    }
    rows[pr].clear();
  }
  return rk;
}

std::vector<IntVec> kernel_basis(const RationalMatrix& m) { return column_reduce(m, true).kernel; }

std::vector<IntVec> image_basis(const RationalMatrix& m) { return column_reduce(m, false).image; }

EchelonBasis::Reduction EchelonBasis::reduce(const IntVec& v) const {
  Reduction red;
  red.remainder = v;
  IntVec& cur = red.remainder;
  while (!cur.empty()) {
    const int low = cur.back().first;
    if (low >= static_cast<int>(owner_.size()) || owner_[low] < 0) break;
    const Row& row = rows_[owner_[low]];
    Integer a = row.v.back().second;
    Integer b = cur.back().second;
    Integer g = gcd(a, b);
    a /= g;
    b /= g;
    cur = combine(a, cur, b, row.v);
    red.scale *= a;
    red.tag_coeffs = add_scaled(a, red.tag_coeffs, b, row.tags);
    Integer c = content(cur);
    Integer ct = content(red.tag_coeffs);
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), ct.get_mpz_t());
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), red.scale.get_mpz_t());
    if (c > 1) {
      divide_exact(cur, c);
      divide_exact(red.tag_coeffs, c);
      red.scale /= c;
    }
  }
  return red;
}

bool EchelonBasis::insert(const IntVec& v, int tag) {
  if (!v.empty() && v.back().first >= dim_) throw std::out_of_range("vector index beyond basis dimension");
  Reduction red = reduce(v);
  if (red.remainder.empty()) return false;
  // remainder = scale*v - sum tag_coeffs * generators
  Row row;
  row.v = std::move(red.remainder);
  IntVec self;
  if (tag >= 0) self.emplace_back(tag, red.scale);
  row.tags = combine(1, self, 1, red.tag_coeffs);
  if (owner_.size() < static_cast<std::size_t>(dim_)) owner_.assign(dim_, -1);
  owner_[row.v.back().first] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

bool EchelonBasis::contains(const IntVec& v) const { return reduce(v).remainder.empty(); }

std::optional<RatVec> EchelonBasis::coordinates(const IntVec& v) const {
  Reduction red = reduce(v);
  if (!red.remainder.empty()) return std::nullopt;
  RatVec out;
  for (const auto& [j, x] : red.tag_coeffs) {
    Rational q(x, red.scale);
    q.canonicalize();
    out.emplace_back(j, q);
  }
  return out;
}

std::optional<RatVec> solve(const RationalMatrix& m, const RatVec& b) {
  // Row scaling keeps solutions, so work with integral S*m and S*b.
  std::vector<Integer> scale(m.rows(), 1);
  for (int c = 0; c < m.cols(); ++c) {
    for (const auto& [r, q] : m.column(c)) {
      mpz_lcm(scale[r].get_mpz_t(), scale[r].get_mpz_t(), q.get_den_mpz_t());
    }
  }
  for (const auto& [r, q] : b) {
    mpz_lcm(scale[r].get_mpz_t(), scale[r].get_mpz_t(), q.get_den_mpz_t());
  }
  auto scaled = [&](const RatVec& v) {
    RatVec out;
    for (const auto& [r, q] : v) {
      if (q != 0) out.emplace_back(r, q * Rational(scale[r]));
    }
    return to_integer(out);
  };
  EchelonBasis basis(m.rows());
  for (int c = 0; c < m.cols(); ++c) basis.insert(scaled(m.column(c)), c);
  return basis.coordinates(scaled(b));
}

bool in_column_space(const RationalMatrix& m, const RatVec& b, int threads) {
  if (is_zero_vector(b)) return true;
  std::vector<RatVec> cols;
  cols.reserve(m.cols() + 1);
  for (int c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  cols.push_back(b);
  const RationalMatrix extended = RationalMatrix::from_columns(m.rows(), std::move(cols));
  return rank(extended, threads) == rank(m, threads);
}

SubquotientBasis homology_dim(const RationalMatrix& d_in, const RationalMatrix& d_out) {
  if (d_in.rows() != d_out.cols()) throw std::invalid_argument("boundary dimensions do not chain");
  if (!(d_out * d_in).is_zero()) throw NotAComplex("composite of boundaries is nonzero");
  SubquotientBasis out;
  out.ambient_dim = d_out.cols();
  out.cycle_basis = kernel_basis(d_out);
  out.boundary_basis = image_basis(d_in);
  EchelonBasis e(out.ambient_dim);
  for (const auto& b : out.boundary_basis) e.insert(b);
  for (const auto& z : out.cycle_basis) {
    if (e.insert(z)) out.representatives.push_back(z);
  }
  out.homology_dim = static_cast<int>(out.representatives.size());
  return out;
}

}  // namespace gss
