#include "gss/hopf.hpp"

#include <bit>
#include <stdexcept>
#include <tuple>

#include "gss/complexes.hpp"

namespace gss {

namespace {

using TripleKey = std::array<std::string, 3>;
using Triple = std::map<TripleKey, Rational>;

void add_triple(Triple& t, const TripleKey& k, const Rational& c) {
  if (c == 0) return;
  Rational& slot = t[k];
  slot += c;
  if (slot == 0) t.erase(k);
}

bool parity_odd(long long a) { return (a & 1) != 0; }

Graph erase_isolated(const Graph& g) { return core_of(g); }

}  // namespace

LinComb product(const Graph& x, const Graph& y) { return LinComb::of(disjoint_union(x, y)); }

LinComb product(const LinComb& x, const LinComb& y) {
  LinComb out;
  for (const auto& [ka, a] : x.terms()) {
    for (const auto& [kb, b] : y.terms()) out.add(disjoint_union(a.graph, b.graph), a.coeff * b.coeff);
  }
  return out;
}

int shuffle_sign(int num_edges, std::uint64_t mask) {
  // Inversions: pairs (i < j) with i outside and j inside the mask.
  long long inversions = 0;
  int outside = 0;
  for (int i = 0; i < num_edges; ++i) {
    if (mask >> i & 1) {
      inversions += outside;
    } else {
      ++outside;
    }
  }
  return parity_odd(inversions) ? -1 : 1;
}

TensorLinComb coproduct(const Graph& ordered) {
  const int n = ordered.num_edges();
  if (n > 62) throw std::invalid_argument("coproduct supports at most 62 edges");
  TensorLinComb out;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    out.add(restrict_mask(ordered, mask), quotient_mask(ordered, mask), shuffle_sign(n, mask));
  }
  return out;
}

TensorLinComb coproduct(const LinComb& x) {
  TensorLinComb out;
  for (const auto& [key, t] : x.terms()) out.add(coproduct(t.graph), t.coeff);
  return out;
}

TensorLinComb tensor_product(const TensorLinComb& a, const TensorLinComb& b) {
  TensorLinComb out;
  for (const auto& [ka, x] : a.terms()) {
    for (const auto& [kb, y] : b.terms()) {
      Rational c = x.coeff * y.coeff;
      if (parity_odd(static_cast<long long>(x.right.num_edges()) * y.left.num_edges())) c = -c;
      out.add(disjoint_union(x.left, y.left), disjoint_union(x.right, y.right), c);
    }
  }
  return out;
}

TensorLinComb tensor_boundary(const TensorLinComb& x, const BoundaryFn& d) {
  TensorLinComb out;
  for (const auto& [key, t] : x.terms()) {
    const LinComb dl = d(t.left);
    for (const auto& [k, s] : dl.terms()) out.add(s.graph, t.right, t.coeff * s.coeff);
    const LinComb dr = d(t.right);
    const Rational sign = t.left.num_edges() % 2 == 0 ? t.coeff : Rational(-t.coeff);
    for (const auto& [k, s] : dr.terms()) out.add(t.left, s.graph, sign * s.coeff);
  }
  return out;
}

TensorLinComb twist(const TensorLinComb& x) {
  TensorLinComb out;
  for (const auto& [key, t] : x.terms()) {
    Rational c = t.coeff;
    if (parity_odd(static_cast<long long>(t.left.num_edges()) * t.right.num_edges())) c = -c;
    out.add_canonical({key.second, key.first}, t.right, t.left, c);
  }
  return out;
}

int counit(const Graph& g) { return g.num_edges() == 0 ? 1 : 0; }

LinComb localize(const LinComb& x) {
  LinComb out;
  for (const auto& [key, t] : x.terms()) out.add(erase_isolated(t.graph), t.coeff);
  return out;
}

TensorLinComb localize(const TensorLinComb& x) {
  TensorLinComb out;
  for (const auto& [key, t] : x.terms()) {
    out.add(erase_isolated(t.left), erase_isolated(t.right), t.coeff);
  }
  return out;
}

TensorLinComb reduced_coproduct_localized(const LinComb& x) {
  TensorLinComb out = localize(coproduct(x));
  const LinComb lx = localize(x);
  const Graph unit;
  for (const auto& [key, t] : lx.terms()) {
    out.add(unit, t.graph, -t.coeff);
    out.add(t.graph, unit, -t.coeff);
  }
  return out;
}

bool is_primitive_localized(const LinComb& x) { return reduced_coproduct_localized(x).is_zero(); }

TensorLinComb cobracket(const LinComb& x) {
  const TensorLinComb loc = localize(coproduct(x));
  TensorLinComb kept;
  for (const auto& [key, t] : loc.terms()) {
    if (t.left.num_vertices() == 0 || t.right.num_vertices() == 0) continue;
    kept.add_canonical(key, t.left, t.right, t.coeff);
  }
  TensorLinComb out = kept;
  out.add(twist(kept), -1);
  return out;
}

LinComb right_component(const TensorLinComb& t, const Graph& right) {
  OrderedGenerator r = OrderedGenerator::normalize(right);
  LinComb out;
  if (r.is_zero()) return out;
  for (const auto& [key, term] : t.terms()) {
    if (key.second == r.canonical_key) out.add(term.left, r.sign > 0 ? term.coeff : Rational(-term.coeff));
  }
  return out;
}

namespace {

// GrCLocal complexes keyed by (b1, max_edges).
class LocalComplexCache {
 public:
  LocalComplexCache(std::string cache_dir) : cache_dir_(std::move(cache_dir)) {}

  const ChainComplex& get(int b1, int max_edges) {
    auto key = std::make_pair(b1, max_edges);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    ComplexSpec spec;
    spec.kind = ComplexKind::GrCLocal;
    spec.truncation = {max_edges, 0};
    spec.b1 = b1;
    return cache_.emplace(key, build_complex(spec, cache_dir_)).first->second;
  }

 private:
  std::string cache_dir_;
  std::map<std::pair<int, int>, ChainComplex> cache_;
};

}  // namespace

bool vanishes_in_homology(const TensorLinComb& e, const std::string& cache_dir, int threads) {
  if (e.is_zero()) return true;
  if (!tensor_boundary(e, boundary_gr_local).is_zero()) {
    throw std::invalid_argument("element of the tensor square is not a cycle");
  }
  // Terms grouped by (right b1, right degree, left b1, left degree).
  using Block = std::tuple<int, int, int, int>;
  std::map<Block, std::vector<const TensorLinComb::Term*>> blocks;
  for (const auto& [key, t] : e.terms()) {
    if (t.left.num_isolated() != 0 || t.right.num_isolated() != 0) {
      throw std::invalid_argument("factors must be free of isolated vertices");
    }
    blocks[{first_betti(t.right), t.right.num_edges(), first_betti(t.left), t.left.num_edges()}]
        .push_back(&t);
  }
  LocalComplexCache complexes(cache_dir);
  for (const auto& [block, terms] : blocks) {
    const auto [rb, rd, lb, ld] = block;
    const ChainComplex& right = complexes.get(rb, rd + 1);
    const ChainComplex& left = complexes.get(lb, ld + 1);
    // Cocycles on the right: functionals vanishing on boundaries.
    const std::vector<IntVec> cocycles = kernel_basis(right.boundary[rd + 1].transpose());
    for (const IntVec& psi : cocycles) {
      std::map<int, Integer> weight(psi.begin(), psi.end());
      LinComb z;
      for (const auto* t : terms) {
        const int idx = right.basis.find(rd, canonical_form(t->right).key);
        auto w = weight.find(idx);
        if (w != weight.end()) z.add(t->left, t->coeff * Rational(w->second));
      }
      if (z.is_zero()) continue;
      if (!in_column_space(left.boundary[ld + 1], left.coordinates(ld, z), threads)) return false;
    }
  }
  return true;
}

PrimitivityReport primitivity_report(const LinComb& x, const std::string& cache_dir, int threads) {
  PrimitivityReport r;
  r.residual = reduced_coproduct_localized(x);
  r.chain_level = r.residual.is_zero();
  r.homology_level = r.chain_level || vanishes_in_homology(r.residual, cache_dir, threads);
  return r;
}

bool compatibility_check(const Graph& x, const Graph& y) {
  const TensorLinComb lhs = coproduct(product(x, y));
  const TensorLinComb rhs = tensor_product(coproduct(x), coproduct(y));
  return lhs == rhs;
}

bool coassociativity_check(const Graph& g) {
  const TensorLinComb d = coproduct(g);
  Triple left, right;
  for (const auto& [key, t] : d.terms()) {
    const TensorLinComb dl = coproduct(t.left);
    for (const auto& [k, s] : dl.terms()) add_triple(left, {k.first, k.second, key.second}, t.coeff * s.coeff);
    const TensorLinComb dr = coproduct(t.right);
    for (const auto& [k, s] : dr.terms()) add_triple(right, {key.first, k.first, k.second}, t.coeff * s.coeff);
  }
  return left == right;
}

bool counit_check(const Graph& g) {
  const TensorLinComb d = coproduct(g);
  LinComb left, right;
  for (const auto& [key, t] : d.terms()) {
    if (counit(t.left)) left.add(t.right, t.coeff);
    if (counit(t.right)) right.add(t.left, t.coeff);
  }
  const LinComb x = LinComb::of(g);
  return left == x && right == x;
}

bool filtration_additivity_check(const Graph& g) {
  const int b = first_betti(g);
  const TensorLinComb d = coproduct(g);
  for (const auto& [key, t] : d.terms()) {
    if (first_betti(t.left) + first_betti(t.right) != b) return false;
  }
  return true;
}

bool chain_map_check(const Graph& g, const BoundaryFn& d) {
  return coproduct(d(g)) == tensor_boundary(coproduct(g), d);
}

bool graded_commutativity_check(const Graph& x, const Graph& y) {
  const Rational sign = parity_odd(static_cast<long long>(x.num_edges()) * y.num_edges()) ? -1 : 1;
  return product(x, y) == product(y, x).scaled(sign);
}

}  // namespace gss
