#include "gss/complexes.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gss/enumerate.hpp"

namespace gss {

namespace {

Rational alternating(int i) { return (i % 2 == 0) ? Rational(1) : Rational(-1); }

bool allows_fixed_b1(ComplexKind k) {
  return k == ComplexKind::GrC || k == ComplexKind::GrCmodX || k == ComplexKind::GrCLocal ||
         k == ComplexKind::IndecGrC || k == ComplexKind::GC2;
}

}  // namespace

LinComb boundary_c(const Graph& g) {
  LinComb out;
  for (int i = 0; i < g.num_edges(); ++i) out.add(contract(g, i).graph, alternating(i));
  return out;
}

LinComb boundary_d(const Graph& g) {
  LinComb out;
  for (int i = 0; i < g.num_edges(); ++i) out.add(delete_edge(g, i).graph, alternating(i));
  return out;
}

LinComb boundary_full(const Graph& g) { return boundary_c(g) - boundary_d(g); }

LinComb boundary_gr(const Graph& g) {
  LinComb out;
  const auto cls = classify_edges(g);
  for (int i = 0; i < g.num_edges(); ++i) {
    if (!cls[i].is_tadpole) out.add(contract(g, i).graph, alternating(i));
    if (cls[i].is_bridge) out.add(delete_edge(g, i).graph, -alternating(i));
  }
  return out;
}

LinComb boundary_gr_local(const Graph& g) {
  LinComb out;
  const LinComb full = boundary_gr(g);
  for (const auto& [key, t] : full.terms()) out.add(core_of(t.graph), t.coeff);
  return out;
}

LinComb boundary_indec(const Graph& g, IndecMode mode) {
  if (g.num_edges() == 0) {
    if (g == points(1)) return {};
    throw GraphError("indecomposable boundary needs a connected graph or a single vertex");
  }
  if (g.num_isolated() != 0 || g.num_components() != 1) {
    throw GraphError("indecomposable boundary needs a connected graph without isolated vertices");
  }
  LinComb out;
  if (g.num_edges() == 1) {
    // p - p^2 reduces to -[p]; a tadpole has boundary zero.
    if (!g.edges()[0].is_loop()) out.add(points(1), -1);
    return out;
  }
  const auto cls = classify_edges(g);
  for (int i = 0; i < g.num_edges(); ++i) {
    if (cls[i].is_tadpole) continue;
    if (!cls[i].is_bridge_to_nowhere) out.add(contract(g, i).graph, alternating(i));
    if (mode == IndecMode::Full && !cls[i].is_bridge) {
      out.add(delete_edge(g, i).graph, -alternating(i));
    }
  }
  return out;
}

LinComb reduce_indecomposable(const LinComb& x) {
  LinComb out;
  for (const auto& [key, t] : x.terms()) {
    const Graph& g = t.graph;
    int comps = 0;
    g.core_components(&comps);
    if (comps == 0) {
      if (g.num_isolated() > 0) out.add(points(1), t.coeff * g.num_isolated());
    } else if (comps == 1) {
      out.add(core_of(g), t.coeff);
    }
  }
  return out;
}

LinComb boundary_gc2(const Graph& g) {
  LinComb out;
  for (int i = 0; i < g.num_edges(); ++i) {
    if (g.edges()[i].is_loop()) continue;
    Graph h = contract(g, i).graph;
    if (h.num_loops() > 0) continue;
    out.add(h, alternating(i));
  }
  return out;
}

std::vector<ComplexKind> all_kinds() {
  return {ComplexKind::FullC,    ComplexKind::FilteredC, ComplexKind::GrC,
          ComplexKind::GrCmodX,  ComplexKind::GrCLocal,  ComplexKind::IndecC,
          ComplexKind::IndecGrC, ComplexKind::GC2};
}

std::string kind_name(ComplexKind k) {
  switch (k) {
    case ComplexKind::FullC: return "FullC";
    case ComplexKind::FilteredC: return "FilteredC";
    case ComplexKind::GrC: return "GrC";
    case ComplexKind::GrCmodX: return "GrCmodX";
    case ComplexKind::GrCLocal: return "GrCLocal";
    case ComplexKind::IndecC: return "IndecC";
    case ComplexKind::IndecGrC: return "IndecGrC";
    case ComplexKind::GC2: return "GC2";
  }
  return "?";
}

ComplexKind parse_kind(const std::string& name) {
  for (ComplexKind k : all_kinds()) {
    if (kind_name(k) == name) return k;
  }
  if (name == "F_nC" || name == "FnC") return ComplexKind::FilteredC;
  throw std::invalid_argument("unknown complex kind: " + name);
}

std::string ComplexSpec::describe() const {
  std::ostringstream os;
  os << kind_name(kind);
  if (kind == ComplexKind::FilteredC) os << "(" << filtration << ")";
  os << " max_edges=" << truncation.max_edges;
  if (has_isolated()) os << " max_isolated=" << truncation.max_isolated;
  if (b1) os << " b1=" << *b1;
  if (max_b1) os << " max_b1=" << *max_b1;
  return os.str();
}

bool ComplexSpec::has_isolated() const {
  return kind == ComplexKind::FullC || kind == ComplexKind::FilteredC || kind == ComplexKind::GrC;
}

int ComplexSpec::vertex_cap() const { return 2 * truncation.max_edges + truncation.max_isolated; }

int GradedBasis::dim(int d) const {
  if (d < 0 || d > top_degree()) return 0;
  return static_cast<int>(generators[d].size());
}

int GradedBasis::find(int d, const std::string& key) const {
  if (d < 0 || d > top_degree()) return -1;
  auto it = index[d].find(key);
  return it == index[d].end() ? -1 : it->second;
}

LinComb ChainComplex::boundary_of(const Graph& g) const {
  switch (spec.kind) {
    case ComplexKind::FullC:
    case ComplexKind::FilteredC:
      return boundary_full(g);
    case ComplexKind::GrC:
      return boundary_gr(g);
    case ComplexKind::GrCmodX: {
      LinComb out;
      const LinComb full = boundary_gr(g);
      for (const auto& [key, t] : full.terms()) {
        if (t.graph.num_isolated() == 0) out.add(t.graph, t.coeff);
      }
      return out;
    }
    case ComplexKind::GrCLocal:
      return boundary_gr_local(g);
    case ComplexKind::IndecC:
      return boundary_indec(g, IndecMode::Full);
    case ComplexKind::IndecGrC:
      return boundary_indec(g, IndecMode::Gr);
    case ComplexKind::GC2:
      return boundary_gc2(g);
  }
  return {};
}

RatVec ChainComplex::coordinates(int d, const LinComb& x) const {
  RatVec v;
  for (const auto& [key, t] : x.terms()) {
    int idx = basis.find(d, key);
    if (idx < 0) throw TermOutsideBasis("term outside basis: " + format_graph(t.graph));
    v.emplace_back(idx, t.coeff);
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

LinComb ChainComplex::element(int d, const RatVec& v) const {
  LinComb x;
  for (const auto& [i, q] : v) x.add(basis.generators.at(d).at(i), q);
  return x;
}

LinComb ChainComplex::element(int d, const IntVec& v) const { return element(d, to_rational(v)); }

ChainComplex build_complex(const ComplexSpec& spec, const std::string& cache_dir) {
  const Truncation& tr = spec.truncation;
  if (tr.max_edges < 0 || tr.max_isolated < 0) throw std::invalid_argument("negative truncation");
  if (spec.b1 && !allows_fixed_b1(spec.kind)) {
    throw std::invalid_argument("fixed b1 needs a boundary that preserves b1");
  }
  EnumerationConstraints c;
  c.max_edges = tr.max_edges;
  c.fixed_b1 = spec.b1;
  c.max_b1 = spec.max_b1;
  switch (spec.kind) {
    case ComplexKind::FilteredC:
      c.max_b1 = spec.max_b1 ? std::min(*spec.max_b1, spec.filtration) : spec.filtration;
      [[fallthrough]];
    case ComplexKind::FullC:
    case ComplexKind::GrC:
      c.max_isolated = spec.vertex_cap();
      c.max_vertices = spec.vertex_cap();
      break;
    case ComplexKind::GrCmodX:
    case ComplexKind::GrCLocal:
      break;
    case ComplexKind::IndecC:
    case ComplexKind::IndecGrC:
      c.connected = true;
      c.min_valence = 1;
      c.min_edges = 1;
      break;
    case ComplexKind::GC2:
      c.connected = true;
      c.min_valence = 3;
      c.no_tadpoles = true;
      c.min_edges = 1;
      break;
  }
  ChainComplex cx;
  cx.spec = spec;
  GradedBasis& b = cx.basis;
  b.generators.assign(tr.max_edges + 1, {});
  b.levels.assign(tr.max_edges + 1, {});
  b.index.assign(tr.max_edges + 1, {});
  std::vector<std::vector<std::pair<int, Graph>>> staged(tr.max_edges + 1);
  if (spec.kind == ComplexKind::IndecC || spec.kind == ComplexKind::IndecGrC) {
    if (!spec.b1 || *spec.b1 == 0) staged[0].emplace_back(0, points(1));
  }
  for (const Graph& g : enumerate_graphs(c, cache_dir)) {
    OrderedGenerator n = OrderedGenerator::normalize(g);
    if (n.is_zero()) continue;
    staged[g.num_edges()].emplace_back(first_betti(n.graph), n.graph);
  }
  for (int d = 0; d <= tr.max_edges; ++d) {
    // Enumeration order is by key within a degree; stable sort by level.
    std::stable_sort(staged[d].begin(), staged[d].end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [lvl, g] : staged[d]) {
      b.index[d].emplace(canonical_form(g).key, static_cast<int>(b.generators[d].size()));
      b.levels[d].push_back(lvl);
      b.generators[d].push_back(std::move(g));
    }
  }
  cx.boundary.resize(tr.max_edges + 1);
  cx.boundary[0] = RationalMatrix(0, b.dim(0));
  for (int d = 1; d <= tr.max_edges; ++d) {
    std::vector<RatVec> cols;
    cols.reserve(b.dim(d));
    for (const Graph& g : b.generators[d]) cols.push_back(cx.coordinates(d - 1, cx.boundary_of(g)));
    cx.boundary[d] = RationalMatrix::from_columns(b.dim(d - 1), std::move(cols));
  }
  return cx;
}

bool boundary_squares_to_zero(const ChainComplex& cx) {
  for (int d = 2; d <= cx.basis.top_degree(); ++d) {
    if (!(cx.boundary[d - 1] * cx.boundary[d]).is_zero()) return false;
  }
  return true;
}

HomologyResult homology_of(const ChainComplex& cx, int degree) {
  HomologyResult r;
  r.degree = degree;
  const int top = cx.basis.top_degree();
  if (degree < 0 || degree > top) return r;
  RationalMatrix d_in = degree + 1 <= top ? cx.boundary[degree + 1]
                                          : RationalMatrix(cx.basis.dim(degree), 0);
  SubquotientBasis h = homology_dim(d_in, cx.boundary[degree]);
  r.dim = h.homology_dim;
  r.reliable = degree + 1 <= cx.spec.truncation.max_edges;
  for (const auto& z : h.representatives) r.representatives.push_back(cx.element(degree, z));
  return r;
}

std::vector<HomologyResult> homology(const ComplexSpec& spec, const std::vector<int>& degrees,
                                     const std::string& cache_dir) {
  ChainComplex cx = build_complex(spec, cache_dir);
  std::vector<HomologyResult> out;
  for (int d : degrees) out.push_back(homology_of(cx, d));
  if (spec.has_isolated()) {
    ComplexSpec more = spec;
    more.truncation.max_isolated += 1;
    ChainComplex cy = build_complex(more, cache_dir);
    for (auto& r : out) {
      if (homology_of(cy, r.degree).dim != r.dim) r.reliable = false;
    }
  }
  return out;
}

}  // namespace gss
