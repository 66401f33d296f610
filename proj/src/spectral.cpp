#include "gss/spectral.hpp"

#include <algorithm>
#include <climits>

namespace gss {

namespace {

std::vector<IntVec> unit_vectors(int count) {
  std::vector<IntVec> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back({{i, Integer(1)}});
  return out;
}

// y = v / scale with v integral.
std::pair<IntVec, Integer> clear_denominators(const RatVec& y) {
  Integer scale = 1;
  for (const auto& [i, q] : y) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
  IntVec v;
  for (const auto& [i, q] : y) {
    if (q == 0) continue;
    Rational x = q * Rational(scale);
    v.emplace_back(i, x.get_num());
  }
  return {v, scale};
}

RatVec add(const RatVec& a, const RatVec& b) {
  std::map<int, Rational> acc;
  for (const auto& [i, q] : a) acc[i] += q;
  for (const auto& [i, q] : b) acc[i] += q;
  RatVec out;
  for (const auto& [i, q] : acc) {
    if (q != 0) out.emplace_back(i, q);
  }
  return out;
}

}  // namespace

int FilteredComplex::dim(int d) const {
  if (d < 0 || d > top_degree()) return 0;
  return static_cast<int>(levels[d].size());
}

int FilteredComplex::prefix(int d, int s) const {
  if (d < 0 || d > top_degree()) return 0;
  const auto& l = levels[d];
  return static_cast<int>(std::upper_bound(l.begin(), l.end(), s) - l.begin());
}

int FilteredComplex::min_level() const {
  int m = INT_MAX;
  for (const auto& l : levels) {
    if (!l.empty()) m = std::min(m, l.front());
  }
  return m == INT_MAX ? 0 : m;
}

int FilteredComplex::max_level() const {
  int m = INT_MIN;
  for (const auto& l : levels) {
    if (!l.empty()) m = std::max(m, l.back());
  }
  return m == INT_MIN ? 0 : m;
}

void FilteredComplex::validate() const {
  if (boundary.size() != levels.size()) throw std::invalid_argument("boundary count mismatch");
  for (int d = 0; d <= top_degree(); ++d) {
    if (!std::is_sorted(levels[d].begin(), levels[d].end())) {
      throw std::invalid_argument("levels must be sorted within each degree");
    }
    if (boundary[d].cols() != dim(d) || boundary[d].rows() != dim(d - 1)) {
      throw std::invalid_argument("boundary shape mismatch");
    }
    for (int c = 0; c < boundary[d].cols(); ++c) {
      for (const auto& [r, q] : boundary[d].column(c)) {
        if (levels[d - 1][r] > levels[d][c]) throw std::invalid_argument("boundary raises filtration");
      }
    }
  }
}

FilteredComplex FilteredComplex::from_chain_complex(const ChainComplex& cx, int complete_level) {
  FilteredComplex fc;
  fc.levels = cx.basis.levels;
  fc.boundary = cx.boundary;
  fc.complete_level = complete_level;
  fc.validate();
  return fc;
}

int Page::dim(int s, int t) const {
  auto it = cells.find({s, t});
  return it == cells.end() ? 0 : it->second.dim;
}

SpectralSequence::SpectralSequence(const FilteredComplex& fc) : fc_(fc) {}

const std::vector<IntVec>& SpectralSequence::cycles(int r, int s, int n) {
  const auto key = std::make_tuple(r, s, n);
  auto it = cycles_.find(key);
  if (it != cycles_.end()) return it->second;
  const int p = fc_.prefix(n, s);
  std::vector<IntVec> z;
  if (p > 0) {
    if (n == 0 || r <= 0) {
      // The boundary never raises the filtration, so Z^0_s = F_s.
      z = unit_vectors(p);
    } else {
      const int q0 = fc_.prefix(n - 1, s - r);
      z = kernel_basis(fc_.boundary[n].block(q0, fc_.dim(n - 1), 0, p));
    }
  }
  return cycles_.emplace(key, std::move(z)).first->second;
}

std::vector<IntVec> SpectralSequence::denominator(int r, int s, int n) {
  std::vector<IntVec> out = cycles(r - 1, s - 1, n);
  if (n + 1 <= fc_.top_degree()) {
    for (const IntVec& z : cycles(r - 1, s + r - 1, n + 1)) {
      RatVec b = fc_.boundary[n + 1].apply(to_rational(z));
      if (!b.empty()) out.push_back(to_integer(b));
    }
  }
  return out;
}

const SpectralSequence::CellBasis& SpectralSequence::cell_basis(int r, int s, int n) {
  const auto key = std::make_tuple(r, s, n);
  auto it = cells_.find(key);
  if (it != cells_.end()) return it->second;
  CellBasis cb{EchelonBasis(fc_.dim(n)), {}};
  // Without level-s generators Z^r_s equals Z^{r-1}_{s-1}, which lies in the
  // denominator.
  const bool has_level = fc_.prefix(n, s) > fc_.prefix(n, s - 1);
  if (has_level) {
    for (const IntVec& d : denominator(r, s, n)) cb.basis.insert(d);
    for (const IntVec& z : cycles(r, s, n)) {
      const int tag = static_cast<int>(cb.representatives.size());
      if (cb.basis.insert(z, tag)) cb.representatives.push_back(z);
    }
  }
  return cells_.emplace(key, std::move(cb)).first->second;
}

bool SpectralSequence::reliable(int r, int s, int n) const {
  return fc_.stabilized && n + 1 <= fc_.top_degree() && s + r - 1 <= fc_.complete_level;
}

PageCell SpectralSequence::cell(int r, int s, int t) {
  const int n = s + t;
  const CellBasis& cb = cell_basis(r, s, n);
  PageCell c;
  c.dim = static_cast<int>(cb.representatives.size());
  c.representatives = cb.representatives;
  c.reliable = reliable(r, s, n);
  return c;
}

std::optional<RatVec> SpectralSequence::page_coordinates(int r, int s, int n, const RatVec& y) {
  const CellBasis& cb = cell_basis(r, s, n);
  if (is_zero_vector(y)) return RatVec{};
  if (cb.representatives.empty()) {
    // Every class is zero; y must still lie in the denominator.
    EchelonBasis d(fc_.dim(n));
    for (const IntVec& v : denominator(r, s, n)) d.insert(v);
    if (!d.contains(clear_denominators(y).first)) return std::nullopt;
    return RatVec{};
  }
  const auto [v, scale] = clear_denominators(y);
  auto coords = cb.basis.coordinates(v);
  if (!coords) return std::nullopt;
  for (auto& [j, q] : *coords) {
    q /= Rational(scale);
    q.canonicalize();
  }
  return coords;
}

Page SpectralSequence::page(int r, int max_degree) {
  Page pg;
  pg.r = r;
  const int top = max_degree < 0 ? fc_.top_degree() : std::min(max_degree, fc_.top_degree());
  for (int n = 0; n <= top; ++n) {
    if (fc_.dim(n) == 0) continue;
    const auto& l = fc_.levels[n];
    for (int s = l.front(); s <= l.back(); ++s) {
      if (fc_.prefix(n, s) == fc_.prefix(n, s - 1)) continue;
      pg.cells[{s, n - s}] = cell(r, s, n - s);
    }
  }
  for (const auto& [st, c] : pg.cells) {
    const auto [s, t] = st;
    const int n = s + t;
    if (n == 0) {
      pg.differential[st] = RationalMatrix(0, c.dim);
      continue;
    }
    const CellBasis& target = cell_basis(r, s - r, n - 1);
    std::vector<RatVec> cols;
    for (const IntVec& z : c.representatives) {
      RatVec img = fc_.boundary[n].apply(to_rational(z));
      auto coords = page_coordinates(r, s - r, n - 1, img);
      if (!coords) throw std::logic_error("boundary of a page cycle left the target cell");
      cols.push_back(*coords);
    }
    pg.differential[st] =
        RationalMatrix::from_columns(static_cast<int>(target.representatives.size()), std::move(cols));
  }
  return pg;
}

std::vector<Page> SpectralSequence::pages(int r_max, int max_degree) {
  std::vector<Page> out;
  for (int r = 1; r <= r_max; ++r) out.push_back(page(r, max_degree));
  return out;
}

Page SpectralSequence::e_infinity(int max_degree) {
  return page(fc_.max_level() - fc_.min_level() + 1, max_degree);
}

SpectralSequence::Push SpectralSequence::locate_and_push(const RatVec& x, int n, int r) {
  if (n < 0 || n > fc_.top_degree()) throw std::invalid_argument("degree out of range");
  Push out;
  if (is_zero_vector(x)) return out;
  int s = INT_MIN;
  for (const auto& [i, q] : x) {
    if (q != 0) s = std::max(s, fc_.levels[n][i]);
  }
  out.s = s;
  out.t = n - s;
  out.lift = x;
  if (n > 0) {
    const RatVec dx = fc_.boundary[n].apply(x);
    const int q0 = fc_.prefix(n - 1, s - r);
    RatVec excess;
    for (const auto& [i, q] : dx) {
      if (i >= q0) excess.emplace_back(i - q0, -q);
    }
    if (!excess.empty()) {
      const RationalMatrix a = fc_.boundary[n].block(q0, fc_.dim(n - 1), 0, fc_.prefix(n, s - 1));
      auto z = solve(a, excess);
      if (!z) throw DoesNotSurvive("class does not survive to the requested page");
      out.lift = add(x, *z);
    }
    out.image = fc_.boundary[n].apply(out.lift);
  }
  if (n > 0) {
    auto coords = page_coordinates(r, s - r, n - 1, out.image);
    if (!coords) throw std::logic_error("pushed chain is not a page cycle");
    out.coordinates = *coords;
  }
  return out;
}

std::vector<E1Comparison> e1_bialgebra_check(const Truncation& tr, int max_level,
                                             const std::string& cache_dir) {
  ComplexSpec spec;
  spec.kind = ComplexKind::FilteredC;
  spec.truncation = tr;
  spec.filtration = max_level;
  const ChainComplex cx = build_complex(spec, cache_dir);
  const FilteredComplex fc = FilteredComplex::from_chain_complex(cx, max_level);
  SpectralSequence ss(fc);
  std::vector<E1Comparison> out;
  for (int s = 0; s <= max_level; ++s) {
    ComplexSpec gr;
    gr.kind = ComplexKind::GrC;
    gr.truncation = tr;
    gr.b1 = s;
    const ChainComplex g = build_complex(gr, cache_dir);
    for (int n = s; n <= tr.max_edges - 1; ++n) {
      E1Comparison c;
      c.s = s;
      c.t = n - s;
      c.page_dim = ss.cell(1, s, n - s).dim;
      c.graded_dim = homology_of(g, n).dim;
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace gss
