#include "gss/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gss {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

void check_edge(const Graph& g, EdgeId e) {
  if (e < 0 || e >= g.num_edges()) {
    throw GraphError("invalid edge id " + std::to_string(e));
  }
}

std::vector<bool> mask_from(const Graph& g, std::span<const EdgeId> gamma) {
  std::vector<bool> in(g.num_edges(), false);
  for (EdgeId e : gamma) {
    check_edge(g, e);
    in[e] = true;
  }
  return in;
}

Surgery restrict_impl(const Graph& g, const std::vector<bool>& in) {
  Surgery s;
  std::vector<Edge> kept;
  for (int i = 0; i < g.num_edges(); ++i) {
    if (in[i]) {
      kept.push_back(g.edges()[i]);
      s.edge_origin.push_back(i);
    }
  }
  s.graph = Graph(g.num_core_vertices(), std::move(kept), g.num_isolated());
  return s;
}

Surgery quotient_impl(const Graph& g, const std::vector<bool>& in) {
  UnionFind uf(g.num_core_vertices());
  for (int i = 0; i < g.num_edges(); ++i) {
    if (in[i]) uf.unite(g.edges()[i].u, g.edges()[i].v);
  }
  std::vector<int> label(g.num_core_vertices(), -1);
  int classes = 0;
  for (int v = 0; v < g.num_core_vertices(); ++v) {
    int r = uf.find(v);
    if (label[r] < 0) label[r] = classes++;
    label[v] = label[r];
  }
  Surgery s;
  std::vector<Edge> kept;
  for (int i = 0; i < g.num_edges(); ++i) {
    if (in[i]) continue;
    const Edge& e = g.edges()[i];
    kept.push_back({label[e.u], label[e.v]});
    s.edge_origin.push_back(i);
  }
  s.graph = Graph(classes, std::move(kept), g.num_isolated());
  return s;
}

}  // namespace

Graph::Graph(int num_vertices, std::vector<Edge> edges, int extra_isolated) {
  if (num_vertices < 0 || extra_isolated < 0) throw GraphError("negative vertex count");
  std::vector<int> used(num_vertices, 0);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= num_vertices || e.v >= num_vertices) {
      throw GraphError("edge endpoint out of range");
    }
    used[e.u] = used[e.v] = 1;
  }
  std::vector<int> relabel(num_vertices, -1);
  for (int v = 0; v < num_vertices; ++v) {
    if (used[v]) relabel[v] = core_++;
  }
  iso_ = num_vertices - core_ + extra_isolated;
  edges_ = std::move(edges);
  for (Edge& e : edges_) e = {relabel[e.u], relabel[e.v]};
}

const Edge& Graph::edge(EdgeId e) const {
  check_edge(*this, e);
  return edges_[e];
}

std::vector<int> Graph::valences() const {
  std::vector<int> val(core_, 0);
  for (const Edge& e : edges_) {
    ++val[e.u];
    ++val[e.v];
  }
  return val;
}

int Graph::num_loops() const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                        [](const Edge& e) { return e.is_loop(); }));
}

std::vector<int> Graph::core_components(int* count) const {
  UnionFind uf(core_);
  for (const Edge& e : edges_) uf.unite(e.u, e.v);
  std::vector<int> comp(core_, -1);
  std::vector<int> id(core_, -1);
  int n = 0;
  for (int v = 0; v < core_; ++v) {
    int r = uf.find(v);
    if (id[r] < 0) id[r] = n++;
    comp[v] = id[r];
  }
  if (count) *count = n;
  return comp;
}

int Graph::num_components() const {
  int n = 0;
  core_components(&n);
  return n + iso_;
}

HalfEdgeStructure to_half_edges(const Graph& g) {
  const int nv = g.num_vertices();
  const int n = nv + 2 * g.num_edges();
  HalfEdgeStructure h;
  h.involution.resize(n);
  h.attachment.resize(n);
  for (int v = 0; v < nv; ++v) {
    h.involution[v] = v;
    h.attachment[v] = v;
  }
  for (int i = 0; i < g.num_edges(); ++i) {
    int a = nv + 2 * i;
    int b = a + 1;
    h.involution[a] = b;
    h.involution[b] = a;
    h.attachment[a] = g.edges()[i].u;
    h.attachment[b] = g.edges()[i].v;
  }
  return h;
}

void validate_half_edges(const HalfEdgeStructure& h) {
  const int n = static_cast<int>(h.involution.size());
  if (static_cast<int>(h.attachment.size()) != n) throw GraphError("size mismatch");
  for (int x = 0; x < n; ++x) {
    int ix = h.involution[x];
    int rx = h.attachment[x];
    if (ix < 0 || ix >= n || rx < 0 || rx >= n) throw GraphError("map out of range");
    if (h.involution[ix] != x) throw GraphError("involution does not square to identity");
    if (h.attachment[rx] != rx) throw GraphError("attachment is not idempotent");
    if ((rx == x) != (ix == x)) throw GraphError("fixed points of attachment and involution differ");
  }
}

Graph from_half_edges(const HalfEdgeStructure& h) {
  validate_half_edges(h);
  const int n = static_cast<int>(h.involution.size());
  std::vector<int> vlabel(n, -1);
  int nv = 0;
  for (int x = 0; x < n; ++x) {
    if (h.involution[x] == x) vlabel[x] = nv++;
  }
  std::vector<Edge> edges;
  for (int x = 0; x < n; ++x) {
    int y = h.involution[x];
    if (y > x) edges.push_back({vlabel[h.attachment[x]], vlabel[h.attachment[y]]});
  }
  return Graph(nv, std::move(edges));
}

int first_betti(const Graph& g) {
  return g.num_edges() - g.num_vertices() + g.num_components();
}

Surgery contract(const Graph& g, EdgeId e) {
  check_edge(g, e);
  std::vector<bool> in(g.num_edges(), false);
  in[e] = true;
  return quotient_impl(g, in);
}

Surgery delete_edge(const Graph& g, EdgeId e) {
  check_edge(g, e);
  std::vector<bool> in(g.num_edges(), true);
  in[e] = false;
  return restrict_impl(g, in);
}

Surgery restrict_to(const Graph& g, std::span<const EdgeId> gamma) {
  return restrict_impl(g, mask_from(g, gamma));
}

Surgery quotient(const Graph& g, std::span<const EdgeId> gamma) {
  return quotient_impl(g, mask_from(g, gamma));
}

Graph restrict_mask(const Graph& g, std::uint64_t mask) {
  std::vector<bool> in(g.num_edges());
  for (int i = 0; i < g.num_edges(); ++i) in[i] = (mask >> i) & 1U;
  return restrict_impl(g, in).graph;
}

Graph quotient_mask(const Graph& g, std::uint64_t mask) {
  std::vector<bool> in(g.num_edges());
  for (int i = 0; i < g.num_edges(); ++i) in[i] = (mask >> i) & 1U;
  return quotient_impl(g, in).graph;
}

std::vector<EdgeClass> classify_edges(const Graph& g) {
  std::vector<EdgeClass> out(g.num_edges());
  const int base = g.num_components();
  const std::vector<int> val = g.valences();
  for (int i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges()[i];
    if (e.is_loop()) {
      out[i].is_tadpole = true;
      continue;
    }
    Graph without = delete_edge(g, i).graph;
    out[i].is_bridge = without.num_components() > base;
    out[i].is_bridge_to_nowhere = out[i].is_bridge && (val[e.u] == 1 || val[e.v] == 1);
  }
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const int off = a.num_core_vertices();
  for (const Edge& e : b.edges()) edges.push_back({e.u + off, e.v + off});
  return Graph(a.num_core_vertices() + b.num_core_vertices(), std::move(edges),
               a.num_isolated() + b.num_isolated());
}

Graph core_of(const Graph& g) { return Graph(g.num_core_vertices(), g.edges()); }

Graph wheel(int spokes) {
  if (spokes < 3) throw GraphError("wheel needs at least 3 spokes");
  std::vector<Edge> edges;
  for (int i = 1; i <= spokes; ++i) edges.push_back({0, i});
  for (int i = 1; i <= spokes; ++i) edges.push_back({i, i % spokes + 1});
  return Graph(spokes + 1, std::move(edges));
}

Graph loop_graph(int n) {
  if (n < 1) throw GraphError("loop graph needs at least one vertex");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges));
}

Graph interval() { return Graph(2, {{0, 1}}); }
Graph tadpole() { return Graph(1, {{0, 0}}); }
Graph points(int k) { return Graph(k, {}); }

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph(n, std::move(edges));
}

std::string format_graph(const Graph& g) {
  std::ostringstream os;
  os << "V=" << g.num_core_vertices() << " ISO=" << g.num_isolated() << " E=";
  for (int i = 0; i < g.num_edges(); ++i) {
    if (i) os << ',';
    os << g.edges()[i].u << '-' << g.edges()[i].v;
  }
  return os.str();
}

Graph parse_graph(const std::string& text) {
  std::istringstream is(text);
  std::string vtok, itok, etok;
  if (!(is >> vtok >> itok)) throw GraphError("malformed graph: " + text);
  is >> etok;
  if (vtok.rfind("V=", 0) != 0 || itok.rfind("ISO=", 0) != 0) {
    throw GraphError("malformed graph: " + text);
  }
  int core = 0;
  int iso = 0;
  try {
    core = std::stoi(vtok.substr(2));
    iso = std::stoi(itok.substr(4));
  } catch (const std::exception&) {
    throw GraphError("malformed graph counts: " + text);
  }
  std::vector<Edge> edges;
  if (!etok.empty()) {
    if (etok.rfind("E=", 0) != 0) throw GraphError("malformed edge list: " + text);
    std::istringstream es(etok.substr(2));
    std::string item;
    while (std::getline(es, item, ',')) {
      if (item.empty()) continue;
      auto dash = item.find('-');
      if (dash == std::string::npos) throw GraphError("malformed edge: " + item);
      try {
        edges.push_back({std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1))});
      } catch (const std::exception&) {
        throw GraphError("malformed edge: " + item);
      }
    }
  }
  Graph g(core, std::move(edges), iso);
  if (g.num_core_vertices() != core) throw GraphError("core vertex without edges: " + text);
  return g;
}

}  // namespace gss
