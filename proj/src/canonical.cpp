#include "gss/canonical.hpp"

#include <algorithm>
#include <map>

namespace gss {

namespace {

using Cells = std::vector<std::vector<int>>;

// Equitable refinement of an ordered partition. Cells split by the vector of
// multiplicities into every current cell; the split order depends only on
// those vectors, so the result is labeling-invariant.
void refine(Cells& cells, const std::vector<int>& mult, int n) {
  bool changed = true;
  std::vector<int> cell_of(n);
  while (changed) {
    changed = false;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
    }
    Cells next;
    next.reserve(cells.size());
    for (auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(std::move(cell));
        continue;
      }
      std::vector<std::pair<std::vector<int>, int>> sigs;
      sigs.reserve(cell.size());
      for (int v : cell) {
        std::vector<int> s(cells.size(), 0);
        for (int w = 0; w < n; ++w) {
          int m = mult[v * n + w];
          if (m) s[cell_of[w]] += m;
        }
        sigs.emplace_back(std::move(s), v);
      }
      std::sort(sigs.begin(), sigs.end());
      std::size_t start = next.size();
      next.push_back({sigs[0].second});
      for (std::size_t i = 1; i < sigs.size(); ++i) {
        if (sigs[i].first != sigs[i - 1].first) next.push_back({});
        next.back().push_back(sigs[i].second);
      }
      if (next.size() - start > 1) changed = true;
    }
    cells = std::move(next);
  }
}

struct ComponentSearch {
  int n = 0;
  const std::vector<int>* mult = nullptr;
  std::vector<std::uint8_t> best_cert;
  std::vector<std::vector<int>> best_orders;  // every leaf achieving best_cert

  std::vector<std::uint8_t> certificate(const std::vector<int>& order) const {
    std::vector<std::uint8_t> cert;
    cert.reserve(n * (n + 1) / 2);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        int m = (*mult)[order[i] * n + order[j]];
        if (m > 255) throw GraphError("edge multiplicity above 255");
        cert.push_back(static_cast<std::uint8_t>(m));
      }
    }
    return cert;
  }

  void search(Cells cells) {
    refine(cells, *mult, n);
    int target = -1;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() > 1 &&
          (target < 0 || cells[c].size() < cells[target].size())) {
        target = static_cast<int>(c);
      }
    }
    if (target < 0) {
      std::vector<int> order;
      order.reserve(n);
      for (auto& c : cells) order.push_back(c[0]);
      auto cert = certificate(order);
      if (best_orders.empty() || cert < best_cert) {
        best_cert = std::move(cert);
        best_orders.clear();
        best_orders.push_back(std::move(order));
      } else if (cert == best_cert) {
        best_orders.push_back(std::move(order));
      }
      return;
    }
    for (int v : cells[target]) {
      Cells child;
      child.reserve(cells.size() + 1);
      for (int c = 0; c < target; ++c) child.push_back(cells[c]);
      child.push_back({v});
      std::vector<int> rest;
      for (int w : cells[target]) {
        if (w != v) rest.push_back(w);
      }
      child.push_back(std::move(rest));
      for (std::size_t c = target + 1; c < cells.size(); ++c) child.push_back(cells[c]);
      search(std::move(child));
    }
  }
};

int permutation_parity(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int parity = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    parity ^= static_cast<int>((len + 1) & 1U);
  }
  return parity;
}

struct Component {
  std::vector<int> vertices;  // global core vertex ids
  std::vector<int> edges;     // global edge ids
  std::vector<int> mult;      // local n x n multiplicities, loops on the diagonal
  std::vector<std::uint8_t> cert;
  std::vector<int> order;     // canonical position -> local vertex
  bool odd = false;
  std::uint64_t vertex_automorphisms = 0;
  bool has_multi = false;
};

void analyze_component(const Graph& g, Component& comp) {
  const int n = static_cast<int>(comp.vertices.size());
  std::map<int, int> local;
  for (int i = 0; i < n; ++i) local[comp.vertices[i]] = i;
  comp.mult.assign(n * n, 0);
  for (int e : comp.edges) {
    int a = local[g.edges()[e].u];
    int b = local[g.edges()[e].v];
    if (a == b) {
      comp.mult[a * n + a] += 1;
    } else {
      comp.mult[a * n + b] += 1;
      comp.mult[b * n + a] += 1;
    }
  }
  for (int m : comp.mult) {
    if (m >= 2) comp.has_multi = true;
  }
  ComponentSearch s;
  s.n = n;
  s.mult = &comp.mult;
  Cells start(1);
  for (int i = 0; i < n; ++i) start[0].push_back(i);
  s.search(std::move(start));
  comp.cert = std::move(s.best_cert);
  comp.order = s.best_orders.front();
  comp.vertex_automorphisms = s.best_orders.size();
  if (comp.has_multi) {
    comp.odd = true;
    return;
  }
  // Without parallel edges an edge is determined by its endpoint pair.
  std::map<std::pair<int, int>, int> edge_index;
  std::vector<std::pair<int, int>> ends;
  for (int e : comp.edges) {
    int a = local[g.edges()[e].u];
    int b = local[g.edges()[e].v];
    if (a > b) std::swap(a, b);
    edge_index[{a, b}] = static_cast<int>(ends.size());
    ends.push_back({a, b});
  }
  std::vector<int> pos_in_best(n);
  for (int i = 0; i < n; ++i) pos_in_best[comp.order[i]] = i;
  for (const auto& leaf : s.best_orders) {
    // leaf[i] -> best[i] is an automorphism.
    std::vector<int> phi(n);
    for (int i = 0; i < n; ++i) phi[leaf[i]] = comp.order[i];
    std::vector<int> perm(ends.size());
    for (std::size_t k = 0; k < ends.size(); ++k) {
      int a = phi[ends[k].first];
      int b = phi[ends[k].second];
      if (a > b) std::swap(a, b);
      perm[k] = edge_index.at({a, b});
    }
    if (permutation_parity(perm)) {
      comp.odd = true;
      return;
    }
  }
}

bool component_less(const Component& a, const Component& b) {
  if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
  if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
  return a.cert < b.cert;
}

bool component_same(const Component& a, const Component& b) {
  return a.vertices.size() == b.vertices.size() && a.cert == b.cert;
}

struct Analysis {
  CanonicalForm form;
  std::vector<Component> comps;  // in canonical order
};

Analysis analyze(const Graph& g) {
  Analysis out;
  int ncomp = 0;
  std::vector<int> comp_of = g.core_components(&ncomp);
  std::vector<Component> comps(ncomp);
  for (int v = 0; v < g.num_core_vertices(); ++v) comps[comp_of[v]].vertices.push_back(v);
  for (int e = 0; e < g.num_edges(); ++e) comps[comp_of[g.edges()[e].u]].edges.push_back(e);
  for (auto& c : comps) analyze_component(g, c);
  std::stable_sort(comps.begin(), comps.end(), component_less);

  std::vector<int>& label = out.form.vertex_relabeling;
  label.assign(g.num_core_vertices(), -1);
  std::vector<Edge> cedges;
  int offset = 0;
  for (const auto& c : comps) {
    const int n = static_cast<int>(c.vertices.size());
    for (int i = 0; i < n; ++i) label[c.vertices[c.order[i]]] = offset + i;
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        int m = c.mult[c.order[i] * n + c.order[j]];
        for (int k = 0; k < m; ++k) cedges.push_back({offset + i, offset + j});
      }
    }
    offset += n;
  }
  std::vector<EdgeId>& erel = out.form.edge_relabeling;
  erel.assign(g.num_edges(), -1);
  std::vector<bool> used(cedges.size(), false);
  for (int e = 0; e < g.num_edges(); ++e) {
    int a = label[g.edges()[e].u];
    int b = label[g.edges()[e].v];
    if (a > b) std::swap(a, b);
    auto it = std::lower_bound(cedges.begin(), cedges.end(), Edge{a, b},
                               [](const Edge& x, const Edge& y) {
                                 return std::pair(x.u, x.v) < std::pair(y.u, y.v);
                               });
    std::size_t k = static_cast<std::size_t>(it - cedges.begin());
    while (used[k]) ++k;
    used[k] = true;
    erel[e] = static_cast<EdgeId>(k);
  }
  if (offset > 255 || g.num_isolated() > 255) throw GraphError("graph too large for key");
  std::string& key = out.form.key;
  key.reserve(2 + 2 * cedges.size());
  key.push_back(static_cast<char>(offset));
  key.push_back(static_cast<char>(g.num_isolated()));
  for (const Edge& e : cedges) {
    key.push_back(static_cast<char>(e.u));
    key.push_back(static_cast<char>(e.v));
  }
  out.form.graph = Graph(offset, std::move(cedges), g.num_isolated());
  out.comps = std::move(comps);
  return out;
}

bool has_odd_automorphism(const std::vector<Component>& comps) {
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (comps[i].odd) return true;
    if (i > 0 && component_same(comps[i], comps[i - 1]) && comps[i].edges.size() % 2 == 1) {
      return true;
    }
  }
  return false;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  if (p > cap) throw AutomorphismOverflow("automorphism group order exceeds cap");
  return static_cast<std::uint64_t>(p);
}

std::uint64_t checked_factorial(int k, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (int i = 2; i <= k; ++i) r = checked_mul(r, static_cast<std::uint64_t>(i), cap);
  return r;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) { return analyze(g).form; }

AutomorphismInfo automorphism_edge_signs(const Graph& g, std::uint64_t cap) {
  Analysis a = analyze(g);
  AutomorphismInfo info;
  info.all_even = !has_odd_automorphism(a.comps);
  std::uint64_t order = 1;
  std::size_t run = 0;
  for (std::size_t i = 0; i < a.comps.size(); ++i) {
    const Component& c = a.comps[i];
    const int n = static_cast<int>(c.vertices.size());
    order = checked_mul(order, c.vertex_automorphisms, cap);
    for (int u = 0; u < n; ++u) {
      for (int v = u; v < n; ++v) {
        int m = c.mult[u * n + v];
        order = checked_mul(order, checked_factorial(m, cap), cap);
        if (u == v) {
          for (int k = 0; k < m; ++k) order = checked_mul(order, 2, cap);
        }
      }
    }
    run = (i > 0 && component_same(c, a.comps[i - 1])) ? run + 1 : 1;
    order = checked_mul(order, static_cast<std::uint64_t>(run), cap);
  }
  order = checked_mul(order, checked_factorial(g.num_isolated(), cap), cap);
  info.group_order = order;
  return info;
}

OrderedGenerator OrderedGenerator::normalize(const Graph& ordered) {
  Analysis a = analyze(ordered);
  OrderedGenerator out;
  out.canonical_key = std::move(a.form.key);
  out.graph = std::move(a.form.graph);
  if (has_odd_automorphism(a.comps)) {
    out.sign = 0;
    return out;
  }
  out.sign = permutation_parity(a.form.edge_relabeling) ? -1 : 1;
  return out;
}

}  // namespace gss
