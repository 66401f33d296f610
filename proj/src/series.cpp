#include "gss/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gss {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("series coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("series coefficient overflow");
  return r;
}

void require_same_shape(const BivariateSeries& a, const BivariateSeries& b) {
  if (a.max_genus() != b.max_genus() || a.max_degree() != b.max_degree()) {
    throw std::invalid_argument("series truncations differ");
  }
}

// Binomial coefficient C(n, k) for n >= 0, exact in int64.
std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i after the multiplication.
    r = checked_mul(r, n - k + i) / i;
  }
  return r;
}

}  // namespace

BivariateSeries::BivariateSeries(int max_genus, int max_degree)
    : max_genus_(max_genus),
      max_degree_(max_degree),
      c_(static_cast<std::size_t>(max_genus + 1) * (max_degree + 1), 0) {
  if (max_genus < 0 || max_degree < 0) throw std::invalid_argument("negative truncation");
}

BivariateSeries BivariateSeries::one(int max_genus, int max_degree) {
  BivariateSeries s(max_genus, max_degree);
  s.set(0, 0, 1);
  return s;
}

std::int64_t BivariateSeries::at(int g, int n) const {
  if (g < 0 || n < 0 || g > max_genus_ || n > max_degree_) return 0;
  return c_[static_cast<std::size_t>(g) * (max_degree_ + 1) + n];
}

void BivariateSeries::set(int g, int n, std::int64_t v) {
  if (g < 0 || n < 0 || g > max_genus_ || n > max_degree_) return;
  c_[static_cast<std::size_t>(g) * (max_degree_ + 1) + n] = v;
}

void BivariateSeries::add(int g, int n, std::int64_t v) { set(g, n, checked_add(at(g, n), v)); }

BivariateSeries BivariateSeries::operator+(const BivariateSeries& o) const {
  require_same_shape(*this, o);
  BivariateSeries r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = checked_add(c_[i], o.c_[i]);
  return r;
}

BivariateSeries BivariateSeries::operator-(const BivariateSeries& o) const {
  require_same_shape(*this, o);
  BivariateSeries r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = checked_add(c_[i], -o.c_[i]);
  return r;
}

BivariateSeries BivariateSeries::operator*(const BivariateSeries& o) const {
  require_same_shape(*this, o);
  BivariateSeries r(max_genus_, max_degree_);
  for (int g1 = 0; g1 <= max_genus_; ++g1) {
    for (int n1 = 0; n1 <= max_degree_; ++n1) {
      const std::int64_t a = at(g1, n1);
      if (a == 0) continue;
      for (int g2 = 0; g1 + g2 <= max_genus_; ++g2) {
        for (int n2 = 0; n1 + n2 <= max_degree_; ++n2) {
          const std::int64_t b = o.at(g2, n2);
          if (b != 0) r.add(g1 + g2, n1 + n2, checked_mul(a, b));
        }
      }
    }
  }
  return r;
}

BivariateSeries BivariateSeries::inverse() const {
  if (at(0, 0) != 1) throw std::invalid_argument("series is not invertible over the integers");
  // Coefficients in (g, n) order: r_{g,n} = -sum_{(a,b) != 0} c_{a,b} r_{g-a,n-b}.
  BivariateSeries r(max_genus_, max_degree_);
  std::vector<std::pair<int, int>> support;
  for (int g = 0; g <= max_genus_; ++g) {
    for (int n = 0; n <= max_degree_; ++n) {
      if ((g != 0 || n != 0) && at(g, n) != 0) support.emplace_back(g, n);
    }
  }
  for (int g = 0; g <= max_genus_; ++g) {
    for (int n = 0; n <= max_degree_; ++n) {
      if (g == 0 && n == 0) {
        r.set(0, 0, 1);
        continue;
      }
      std::int64_t acc = 0;
      for (const auto& [a, b] : support) {
        if (a > g || b > n) continue;
        const std::int64_t prev = r.at(g - a, n - b);
        if (prev != 0) acc = checked_add(acc, checked_mul(at(a, b), prev));
      }
      r.set(g, n, -acc);
    }
  }
  return r;
}

bool BivariateSeries::operator==(const BivariateSeries& o) const {
  return max_genus_ == o.max_genus_ && max_degree_ == o.max_degree_ && c_ == o.c_;
}

std::string BivariateSeries::to_csv() const {
  std::ostringstream os;
  os << "genus,degree,dim\n";
  for (int g = 0; g <= max_genus_; ++g) {
    for (int n = 0; n <= max_degree_; ++n) {
      if (at(g, n) != 0) os << g << "," << n << "," << at(g, n) << "\n";
    }
  }
  return os.str();
}

Polynomial f_poly(int k, int max_degree) {
  if (k < 1) throw std::invalid_argument("f_poly needs k >= 1");
  Polynomial p(max_degree + 1, 0);
  if (4 * k + 2 > max_degree) return p;
  p[4 * k + 2] = 1;
  for (int i = 1; i <= k - 1; ++i) {
    const int shift = 4 * i + 1;
    for (int e = max_degree; e >= shift; --e) p[e] = checked_add(p[e], p[e - shift]);
  }
  return p;
}

std::int64_t evaluate(const Polynomial& p, std::int64_t x) {
  std::int64_t acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = checked_add(checked_mul(acc, x), *it);
  return acc;
}

BivariateSeries tensor_series(int max_genus, int max_degree) {
  BivariateSeries denom = BivariateSeries::one(max_genus, max_degree);
  for (int k = 1; 2 * k + 1 <= max_genus; ++k) {
    const Polynomial f = f_poly(k, max_degree);
    for (int n = 0; n <= max_degree; ++n) {
      if (f[n] != 0) denom.add(2 * k + 1, n, -f[n]);
    }
  }
  return denom.inverse();
}

std::vector<std::int64_t> euler_characteristics(int max_genus) {
  // Substituting t = -1 is a ring map, so it commutes with the inversion.
  // Each f is evaluated on its full, untruncated expansion.
  std::vector<std::int64_t> denom(max_genus + 1, 0);
  denom[0] = 1;
  for (int k = 1; 2 * k + 1 <= max_genus; ++k) {
    const int deg_f = 2 * k * k + 3 * k + 1;
    denom[2 * k + 1] = -evaluate(f_poly(k, deg_f), -1);
  }
  std::vector<std::int64_t> r(max_genus + 1, 0);
  r[0] = 1;
  for (int g = 1; g <= max_genus; ++g) {
    std::int64_t acc = 0;
    for (int a = 1; a <= g; ++a) acc = checked_add(acc, checked_mul(denom[a], r[g - a]));
    r[g] = -acc;
  }
  return r;
}

DiagonalSeries diagonal_series(int max_genus) {
  const int max_degree = 2 * max_genus;
  DiagonalSeries out;
  BivariateSeries denom = BivariateSeries::one(max_genus, max_degree);
  for (int g = 3; g <= max_genus; g += 2) denom.add(g, 2 * g, -1);
  out.geometric = denom.inverse();
  // (1 - s^2 t^4) / (1 - s^2 t^4 - s^3 t^6)
  BivariateSeries num = BivariateSeries::one(max_genus, max_degree);
  num.add(2, 4, -1);
  BivariateSeries den = BivariateSeries::one(max_genus, max_degree);
  den.add(2, 4, -1);
  den.add(3, 6, -1);
  out.closed_form = num * den.inverse();
  if (!(out.geometric == out.closed_form)) {
    for (int g = 0; g <= max_genus; ++g) {
      for (int n = 0; n <= max_degree; ++n) {
        if (out.geometric.at(g, n) != out.closed_form.at(g, n)) {
          throw MismatchError("diagonal series expansions differ at s^" + std::to_string(g) +
                              " t^" + std::to_string(n));
        }
      }
    }
  }
  return out;
}

std::vector<std::int64_t> diagonal_counts(int max_n) {
  std::vector<std::int64_t> r(max_n + 1, 0);
  r[0] = 1;
  for (int n = 1; n <= max_n; ++n) {
    std::int64_t acc = 0;
    for (int a = 3; a <= n; a += 2) acc = checked_add(acc, r[n - a]);
    r[n] = acc;
  }
  return r;
}

double bisect_unit_root(const std::function<double(double)>& p, double tol) {
  double lo = 0.0, hi = 1.0;
  if (p(lo) - 1.0 > 0 || p(hi) - 1.0 < 0) throw std::invalid_argument("no root bracketed in (0, 1)");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (p(mid) - 1.0 < 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double growth_root() {
  return bisect_unit_root([](double s) { return s * s * s + s * s; });
}

double growth_root_approx() {
  return bisect_unit_root([](double s) {
    double acc = 0;
    for (int e = 3; e <= 23; e += 2) acc += std::pow(s, e);
    return acc;
  });
}

int OmegaWord::genus() const { return indices.empty() ? 0 : 2 * indices.back() + 1; }

int OmegaWord::degree() const {
  int d = shifted ? 1 : 0;
  for (int k : indices) d += 4 * k + 1;
  return d;
}

std::string OmegaWord::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) s += "^";
    s += "w" + std::to_string(4 * indices[i] + 1);
  }
  return shifted ? "[" + s + "]" : s;
}

std::vector<OmegaWord> omega_basis(int genus, int degree, bool shifted) {
  std::vector<OmegaWord> out;
  if (genus < 3 || genus % 2 == 0) return out;
  const int top = (genus - 1) / 2;
  const int rest = degree - (shifted ? 1 : 0) - (4 * top + 1);
  if (rest < 0) return out;
  // Subsets of {1..top-1} with sum(4k+1) == rest.
  const int m = top - 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    int sum = 0;
    std::vector<int> idx;
    for (int i = 0; i < m; ++i) {
      if (mask >> i & 1) {
        sum += 4 * (i + 1) + 1;
        idx.push_back(i + 1);
      }
    }
    if (sum != rest) continue;
    idx.push_back(top);
    out.push_back({idx, shifted});
  }
  return out;
}

BivariateSeries sym_of(const BivariateSeries& dims) {
  const int G = dims.max_genus(), N = dims.max_degree();
  BivariateSeries r = BivariateSeries::one(G, N);
  for (int g = 0; g <= G; ++g) {
    for (int n = 0; n <= N; ++n) {
      const std::int64_t d = dims.at(g, n);
      if (d == 0) continue;
      if (g == 0 && n == 0) throw std::invalid_argument("generator in bidegree (0, 0)");
      if (d < 0) throw std::invalid_argument("negative generator count");
      // Factor sum_j c_j s^{jg} t^{jn}.
      BivariateSeries f(G, N);
      for (int j = 0; j * g <= G && j * n <= N; ++j) {
        const std::int64_t c = n % 2 == 0 ? binomial(d + j - 1, j) : binomial(d, j);
        if (c == 0) break;
        f.set(j * g, j * n, c);
      }
      r = r * f;
    }
  }
  return r;
}

BivariateSeries pbw_dims(const std::vector<BigradedGenerator>& gens, AlgebraKind kind,
                         int max_genus, int max_degree) {
  for (const auto& g : gens) {
    if (g.genus < 1 || g.degree < 0) throw std::invalid_argument("generators need genus >= 1");
  }
  BivariateSeries space(max_genus, max_degree);
  for (const auto& g : gens) space.add(g.genus, g.degree, 1);

  if (kind == AlgebraKind::Sym) {
    // Parity may differ from the degree, so build factors generator by generator.
    BivariateSeries r = BivariateSeries::one(max_genus, max_degree);
    for (const auto& g : gens) {
      BivariateSeries f = BivariateSeries::one(max_genus, max_degree);
      if (g.odd) {
        f.add(g.genus, g.degree, 1);
      } else {
        for (int j = 1; j * g.genus <= max_genus && j * g.degree <= max_degree; ++j) {
          f.set(j * g.genus, j * g.degree, 1);
        }
      }
      r = r * f;
    }
    return r;
  }

  BivariateSeries denom = BivariateSeries::one(max_genus, max_degree) - space;
  const BivariateSeries tensor = denom.inverse();
  if (kind == AlgebraKind::Tensor) return tensor;

  for (const auto& g : gens) {
    if (g.odd != (g.degree % 2 == 1)) throw std::invalid_argument("parity must match degree");
  }
  // Solve prod over Lie bidegrees of the PBW factors = tensor, in genus
  // order. A factor in genus g only changes coefficients of genus >= g and
  // at genus g only its own bidegree, since all genera are positive.
  BivariateSeries lie(max_genus, max_degree);
  BivariateSeries prod = BivariateSeries::one(max_genus, max_degree);
  for (int g = 1; g <= max_genus; ++g) {
    BivariateSeries layer(max_genus, max_degree);
    for (int n = 0; n <= max_degree; ++n) {
      const std::int64_t d = tensor.at(g, n) - prod.at(g, n);
      if (d < 0) throw std::logic_error("negative free Lie dimension");
      lie.set(g, n, d);
      layer.set(g, n, d);
    }
    prod = prod * sym_of(layer);
  }
  return lie;
}

std::vector<BigradedGenerator> omega_generators(int max_genus) {
  std::vector<BigradedGenerator> out;
  for (int top = 1; 2 * top + 1 <= max_genus; ++top) {
    const int m = top - 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      int deg = 4 * top + 2;
      for (int i = 0; i < m; ++i) {
        if (mask >> i & 1) deg += 4 * (i + 1) + 1;
      }
      out.push_back({2 * top + 1, deg, deg % 2 == 1});
    }
  }
  return out;
}

BigradedGenerator epsilon_generator() { return {1, 1, true}; }

BivariateSeries wheel_monomial_counts(int max_genus, int max_degree) {
  std::vector<BigradedGenerator> gens;
  for (int g = 3; g <= max_genus; g += 2) gens.push_back({g, 2 * g, false});
  gens.push_back({1, 1, true});
  return pbw_dims(gens, AlgebraKind::Sym, max_genus, max_degree);
}

bool is_representable(int k) {
  // Subset sums of 5, 9, 13, ... up to k.
  if (k <= 0) return false;
  std::vector<bool> reach(k + 1, false);
  reach[0] = true;
  for (int part = 5; part <= k; part += 4) {
    for (int v = k; v >= part; --v) {
      if (reach[v - part]) reach[v] = true;
    }
  }
  return reach[k];
}

const std::set<int>& quoted_s_a() {
  static const std::set<int> s{1, 2, 3, 4, 6, 7, 8, 10, 11, 12, 15, 16, 19, 20, 23, 24, 28, 32, 36, 40};
  return s;
}

const std::set<int>& quoted_s_sl() {
  static const std::set<int> s{1, 2, 3, 6, 7, 10, 11, 15, 19, 23};
  return s;
}

ExceptionalSets exceptional_sets(bool check) {
  ExceptionalSets out;
  // Every integer >= 41 is representable; 80 leaves a margin that the
  // loop verifies rather than assumes.
  out.bound = 80;
  for (int k = 0; k <= out.bound; ++k) {
    if (is_representable(k)) out.representable.insert(k);
  }
  for (int k = 41; k <= out.bound; ++k) {
    if (!out.representable.count(k)) throw MismatchError("non-representable value above 40");
  }
  // k = 0 is realized by a single form, which has degree exactly 2g.
  for (int k = 1; k <= out.bound; ++k) {
    if (!out.representable.count(k)) out.s_a.insert(k);
  }
  for (int k = -1; k <= out.bound; ++k) {
    if (out.s_a.count(k) && out.s_a.count(k + 1)) out.s_sl.insert(k);
  }
  if (check) {
    if (out.s_a != quoted_s_a()) throw MismatchError("derived S_A differs from the quoted set");
    if (out.s_sl != quoted_s_sl()) throw MismatchError("derived S_SL differs from the quoted set");
  }
  return out;
}

namespace {

bool is_lyndon(const std::vector<int>& w) {
  // Strictly smaller than every proper rotation.
  const std::size_t n = w.size();
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<int> rot(w.begin() + static_cast<long>(i), w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(i));
    if (!(w < rot)) return false;
  }
  return true;
}

std::string bracket_of(const std::vector<int>& w) {
  if (w.size() == 1) {
    static const std::string letters = "xyzuvw";
    return w[0] < static_cast<int>(letters.size()) ? std::string(1, letters[w[0]])
                                                   : "g" + std::to_string(w[0]);
  }
  // Standard factorization: w = uv with v the longest proper Lyndon suffix.
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::vector<int> v(w.begin() + static_cast<long>(i), w.end());
    if (is_lyndon(v)) {
      std::vector<int> u(w.begin(), w.begin() + static_cast<long>(i));
      return "[" + bracket_of(u) + "," + bracket_of(v) + "]";
    }
  }
  throw std::logic_error("Lyndon word without a standard factorization");
}

}  // namespace

std::vector<HallElement> hall_basis(int num_generators, int max_length) {
  if (num_generators < 1) throw std::invalid_argument("need at least one generator");
  std::vector<HallElement> out;
  // Duval's algorithm emits Lyndon words of length <= max_length in
  // lexicographic order.
  std::vector<int> w{-1};
  while (!w.empty()) {
    ++w.back();
    out.push_back({w, bracket_of(w)});
    const std::size_t m = w.size();
    while (static_cast<int>(w.size()) < max_length) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == num_generators - 1) w.pop_back();
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const HallElement& a, const HallElement& b) { return a.word.size() < b.word.size(); });
  return out;
}

std::int64_t witt_number(int num_generators, int n) {
  // (1/n) sum_{d | n} mu(d) q^{n/d}
  auto mobius = [](int d) {
    int r = 1;
    for (int p = 2; p * p <= d; ++p) {
      if (d % p == 0) {
        d /= p;
        if (d % p == 0) return 0;
        r = -r;
      }
    }
    return d > 1 ? -r : r;
  };
  std::int64_t acc = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    std::int64_t pw = 1;
    for (int i = 0; i < n / d; ++i) pw = checked_mul(pw, num_generators);
    acc = checked_add(acc, mobius(d) * pw);
  }
  return acc / n;
}

}  // namespace gss
