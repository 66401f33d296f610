#include "gss/bar.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace gss {

namespace {

int parity_sign(long e) { return e % 2 == 0 ? 1 : -1; }

BarWord slice(const BarWord& w, int from, int to) {
  BarWord out;
  out.letters.assign(w.letters.begin() + from, w.letters.begin() + to);
  return out;
}

BarChain scaled(const BarChain& c, std::int64_t k) {
  BarChain out;
  for (const auto& [w, x] : c) accumulate(out, w, x * k);
  return out;
}

BarChain sum(const BarChain& a, const BarChain& b) {
  BarChain out = a;
  for (const auto& [w, x] : b) accumulate(out, w, x);
  return out;
}

BarChain single(const BarWord& w) { return BarChain{{w, 1}}; }

void add_into(BarTensor& out, const BarTensor& t, std::int64_t k = 1) {
  for (const auto& [ab, x] : t) accumulate(out, ab.first, ab.second, x * k);
}

}  // namespace

int ExteriorWord::degree() const {
  int d = 0;
  for (int k : indices) d += 4 * k + 1;
  return d;
}

int ExteriorWord::genus() const { return indices.empty() ? 0 : 2 * indices.back() + 1; }

std::string ExteriorWord::to_string() const {
  if (indices.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) s += "^";
    s += "b" + std::to_string(4 * indices[i] + 1);
  }
  return s;
}

std::pair<int, ExteriorWord> exterior_multiply(const ExteriorWord& a, const ExteriorWord& b) {
  // Moving each generator of b left past the larger generators of a costs
  // one sign per pair, all generators being odd.
  long inversions = 0;
  for (int y : b.indices) {
    for (int x : a.indices) {
      if (x == y) return {0, {}};
      if (x > y) ++inversions;
    }
  }
  ExteriorWord w;
  std::merge(a.indices.begin(), a.indices.end(), b.indices.begin(), b.indices.end(),
             std::back_inserter(w.indices));
  return {parity_sign(inversions), w};
}

int BarWord::degree() const {
  int d = 0;
  for (const auto& p : letters) d += p.degree() + 1;
  return d;
}

int BarWord::genus() const {
  int g = 0;
  for (const auto& p : letters) g += p.genus();
  return g;
}

std::string BarWord::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) s += "|";
    s += letters[i].to_string();
  }
  return s + "]";
}

void accumulate(BarChain& c, const BarWord& w, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = c.emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) c.erase(it);
  }
}

void accumulate(BarTensor& t, const BarWord& a, const BarWord& b, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = t.emplace(std::make_pair(a, b), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) t.erase(it);
  }
}

BarWord bar_letter(std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  if (indices.empty() || std::adjacent_find(indices.begin(), indices.end()) != indices.end() || indices[0] < 1) {
    throw std::invalid_argument("letter indices must be distinct and >= 1");
  }
  BarWord w;
  w.letters.push_back({indices});
  return w;
}

BarChain shuffle_product(const BarWord& u, const BarWord& v) {
  BarChain out;
  const int n = u.length(), m = v.length();
  std::vector<int> du(n), dv(m);
  for (int i = 0; i < n; ++i) du[i] = u.letters[i].degree() + 1;
  for (int j = 0; j < m; ++j) dv[j] = v.letters[j].degree() + 1;
  BarWord w;
  // i letters of u and j letters of v placed; sign tracks crossings.
  std::function<void(int, int, long)> rec = [&](int i, int j, long crossings) {
    if (i == n && j == m) {
      accumulate(out, w, parity_sign(crossings));
      return;
    }
    if (i < n) {
      w.letters.push_back(u.letters[i]);
      rec(i + 1, j, crossings);
      w.letters.pop_back();
    }
    if (j < m) {
      // v_j moves past the remaining letters u_i..u_{n-1}.
      long c = 0;
      for (int k = i; k < n; ++k) c += static_cast<long>(du[k]) * dv[j];
      w.letters.push_back(v.letters[j]);
      rec(i, j + 1, crossings + c);
      w.letters.pop_back();
    }
  };
  rec(0, 0, 0);
  return out;
}

BarChain shuffle_product(const BarChain& u, const BarChain& v) {
  BarChain out;
  for (const auto& [a, x] : u) {
    for (const auto& [b, y] : v) {
      for (const auto& [w, z] : shuffle_product(a, b)) accumulate(out, w, x * y * z);
    }
  }
  return out;
}

BarTensor deconcatenate(const BarWord& w) {
  BarTensor out;
  for (int i = 0; i <= w.length(); ++i) accumulate(out, slice(w, 0, i), slice(w, i, w.length()), 1);
  return out;
}

BarTensor deconcatenate(const BarChain& c) {
  BarTensor out;
  for (const auto& [w, x] : c) add_into(out, deconcatenate(w), x);
  return out;
}

BarChain d_internal(const BarWord& w) {
  BarChain out;
  const int n = w.length();
  for (int i = 1; i <= n - 1; ++i) {
    // Positions are 1-based as in the formula: letters p_1..p_{i-1} and the
    // left factor p_i carry s.
    long s_exponent = 0;
    for (int j = 0; j < i; ++j) s_exponent += w.letters[j].degree();
    const auto [sign, merged] = exterior_multiply(w.letters[i - 1], w.letters[i]);
    if (sign == 0) continue;
    BarWord t;
    t.letters.assign(w.letters.begin(), w.letters.begin() + (i - 1));
    t.letters.push_back(merged);
    t.letters.insert(t.letters.end(), w.letters.begin() + (i + 1), w.letters.end());
    accumulate(out, t, parity_sign(i) * parity_sign(s_exponent) * sign);
  }
  return out;
}

BarChain d_internal(const BarChain& c) {
  BarChain out;
  for (const auto& [w, x] : c) {
    for (const auto& [t, y] : d_internal(w)) accumulate(out, t, x * y);
  }
  return out;
}

std::vector<ExteriorWord> exterior_letters(int max_index) {
  std::vector<ExteriorWord> out;
  for (std::uint32_t mask = 1; mask < (1u << max_index); ++mask) {
    ExteriorWord p;
    for (int k = 0; k < max_index; ++k) {
      if (mask >> k & 1) p.indices.push_back(k + 1);
    }
    out.push_back(p);
  }
  std::sort(out.begin(), out.end(), [](const ExteriorWord& a, const ExteriorWord& b) {
    return std::make_pair(a.degree(), a.indices) < std::make_pair(b.degree(), b.indices);
  });
  return out;
}

std::vector<BarWord> bar_words(int max_length, int max_index) {
  const auto letters = exterior_letters(max_index);
  std::vector<BarWord> out{BarWord{}};
  std::vector<BarWord> layer{BarWord{}};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<BarWord> next;
    for (const auto& w : layer) {
      for (const auto& p : letters) {
        BarWord x = w;
        x.letters.push_back(p);
        next.push_back(std::move(x));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::vector<BarWord> bar_words_of_degree(int n) {
  int max_index = 0;
  while (4 * (max_index + 1) + 2 <= n) ++max_index;
  std::vector<ExteriorWord> letters;
  for (const auto& p : exterior_letters(max_index)) {
    if (p.degree() + 1 <= n) letters.push_back(p);
  }
  std::vector<BarWord> out;
  BarWord w;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      out.push_back(w);
      return;
    }
    for (const auto& p : letters) {
      if (p.degree() + 1 > remaining) continue;
      w.letters.push_back(p);
      rec(remaining - p.degree() - 1);
      w.letters.pop_back();
    }
  };
  rec(n);
  return out;
}

int d_squared_failures(int max_length, int max_index) {
  int failures = 0;
  for (const auto& w : bar_words(max_length, max_index)) {
    if (!d_internal(d_internal(w)).empty()) ++failures;
  }
  return failures;
}

int shuffle_commutativity_failures(int max_length, int max_index) {
  int failures = 0;
  const auto words = bar_words(max_length, max_index);
  for (const auto& u : words) {
    for (const auto& v : words) {
      const long e = static_cast<long>(u.degree()) * v.degree();
      if (shuffle_product(u, v) != scaled(shuffle_product(v, u), parity_sign(e))) ++failures;
    }
  }
  return failures;
}

int coassociativity_failures(int max_length, int max_index) {
  int failures = 0;
  for (const auto& w : bar_words(max_length, max_index)) {
    // (Delta (x) 1) Delta and (1 (x) Delta) Delta as triples.
    std::map<std::array<BarWord, 3>, std::int64_t> left, right;
    for (const auto& [ab, x] : deconcatenate(w)) {
      for (const auto& [cd, y] : deconcatenate(ab.first)) left[{cd.first, cd.second, ab.second}] += x * y;
      for (const auto& [cd, y] : deconcatenate(ab.second)) right[{ab.first, cd.first, cd.second}] += x * y;
    }
    std::erase_if(left, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(right, [](const auto& kv) { return kv.second == 0; });
    if (left != right) ++failures;
    // Counit on either side.
    BarChain l, r;
    for (const auto& [ab, x] : deconcatenate(w)) {
      if (ab.first.letters.empty()) accumulate(l, ab.second, x);
      if (ab.second.letters.empty()) accumulate(r, ab.first, x);
    }
    if (l != single(w) || r != single(w)) ++failures;
  }
  return failures;
}

int derivation_failures(int max_length, int max_index) {
  int failures = 0;
  const auto words = bar_words(max_length, max_index);
  for (const auto& u : words) {
    for (const auto& v : words) {
      if (u.length() + v.length() > max_length + 1) continue;
      const BarChain lhs = d_internal(shuffle_product(u, v));
      const BarChain rhs = sum(shuffle_product(d_internal(u), single(v)),
                               scaled(shuffle_product(single(u), d_internal(v)), parity_sign(u.degree())));
      if (lhs != rhs) ++failures;
    }
  }
  return failures;
}

int coderivation_failures(int max_length, int max_index) {
  int failures = 0;
  for (const auto& w : bar_words(max_length, max_index)) {
    const BarTensor lhs = deconcatenate(d_internal(w));
    BarTensor rhs;
    for (const auto& [ab, x] : deconcatenate(w)) {
      for (const auto& [da, y] : d_internal(ab.first)) accumulate(rhs, da, ab.second, x * y);
      const int sign = parity_sign(ab.first.degree());
      for (const auto& [db, y] : d_internal(ab.second)) accumulate(rhs, ab.first, db, x * y * sign);
    }
    if (lhs != rhs) ++failures;
  }
  return failures;
}

int genus_filtration_failures(int max_length, int max_index) {
  int failures = 0;
  for (const auto& w : bar_words(max_length, max_index)) {
    for (const auto& [t, x] : d_internal(w)) {
      if (t.genus() >= w.genus()) ++failures;
    }
  }
  const auto letters = exterior_letters(max_index);
  for (const auto& a : letters) {
    for (const auto& b : letters) {
      const auto [sign, p] = exterior_multiply(a, b);
      if (sign != 0 && p.genus() > std::max(a.genus(), b.genus())) ++failures;
    }
  }
  return failures;
}

int BarComplex::find(int degree, const BarWord& w) const {
  if (degree < 0 || degree >= static_cast<int>(basis.size())) return -1;
  const auto& b = basis[degree];
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] == w) return static_cast<int>(i);
  }
  return -1;
}

RatVec BarComplex::coordinates(int degree, const BarChain& c) const {
  std::map<int, Rational> acc;
  for (const auto& [w, x] : c) {
    const int i = find(degree, w);
    if (i < 0) throw std::invalid_argument("word " + w.to_string() + " is not a basis element");
    acc[i] += Rational(static_cast<long>(x));
  }
  RatVec out;
  for (const auto& [i, q] : acc) {
    if (q != 0) out.emplace_back(i, q);
  }
  return out;
}

BarComplex build_bar_complex(int max_degree) {
  BarComplex bc;
  for (int n = 0; n <= max_degree; ++n) {
    auto words = bar_words_of_degree(n);
    std::stable_sort(words.begin(), words.end(),
                     [](const BarWord& a, const BarWord& b) { return a.genus() < b.genus(); });
    std::vector<int> levels;
    for (const auto& w : words) levels.push_back(w.genus());
    bc.basis.push_back(std::move(words));
    bc.filtered.levels.push_back(std::move(levels));
  }
  for (int n = 0; n <= max_degree; ++n) {
    if (n == 0) {
      bc.filtered.boundary.emplace_back(0, static_cast<int>(bc.basis[0].size()));
      continue;
    }
    std::vector<RatVec> cols;
    for (const auto& w : bc.basis[n]) cols.push_back(bc.coordinates(n - 1, d_internal(w)));
    bc.filtered.boundary.push_back(
        RationalMatrix::from_columns(static_cast<int>(bc.basis[n - 1].size()), std::move(cols)));
  }
  // Genus is at most half the bar degree, so every level of the present
  // degrees is complete.
  bc.filtered.complete_level = max_degree;
  bc.filtered.validate();
  return bc;
}

std::vector<Page> canonical_pages(const BarComplex& bc, int r_max, int max_degree) {
  SpectralSequence ss(bc.filtered);
  return ss.pages(r_max, max_degree);
}

BivariateSeries expected_abutment(int max_genus, int max_degree) {
  std::vector<BigradedGenerator> gens;
  for (int k = 1; 2 * k + 1 <= max_genus; ++k) gens.push_back({2 * k + 1, 4 * k + 2, false});
  return pbw_dims(gens, AlgebraKind::Sym, max_genus, max_degree);
}

bool KoszulReport::agrees() const {
  return std::all_of(rows.begin(), rows.end(), [](const KoszulRow& r) { return r.computed == r.expected; });
}

KoszulReport koszul_homology_check(int max_degree, int max_genus) {
  const BarComplex bc = build_bar_complex(max_degree + 1);
  const FilteredComplex& fc = bc.filtered;
  // Bar degree n has genus at most n / 2, so this window holds every class.
  const BivariateSeries expected = expected_abutment(max_degree, max_degree);
  KoszulReport report;
  std::vector<int> ranks(max_degree + 2, 0);
  for (int n = 1; n <= max_degree + 1; ++n) ranks[n] = rank(fc.boundary[n]);
  for (int n = 0; n <= max_degree; ++n) {
    KoszulRow row;
    row.degree = n;
    row.computed = fc.dim(n) - ranks[n] - ranks[n + 1];
    for (int g = 0; g <= max_degree; ++g) row.expected += static_cast<int>(expected.at(g, n));
    report.rows.push_back(row);
  }
  SpectralSequence ss(fc);
  const Page inf = ss.e_infinity(max_degree);
  for (int g = 0; g <= max_genus; ++g) {
    for (int n = 0; n <= max_degree; ++n) {
      KoszulRow row;
      row.genus = g;
      row.degree = n;
      row.computed = inf.dim(g, n - g);
      row.expected = static_cast<int>(expected.at(g, n));
      report.rows.push_back(row);
    }
  }
  return report;
}

}  // namespace gss
