#include "gss/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "gss/canonical.hpp"

namespace gss {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

bool core_admissible(const Graph& core, const EnumerationConstraints& c) {
  const int b1 = first_betti(core);
  if (c.fixed_b1 && b1 != *c.fixed_b1) return false;
  if (c.max_b1 && b1 > *c.max_b1) return false;
  if (core.num_edges() < c.min_edges) return false;
  if (c.no_tadpoles && core.num_loops() > 0) return false;
  if (c.min_valence > 0) {
    for (int v : core.valences()) {
      if (v < c.min_valence) return false;
    }
  }
  return true;
}

std::vector<Graph> generate(const EnumerationConstraints& c) {
  std::optional<int> b1_bound = c.fixed_b1;
  if (c.max_b1) b1_bound = b1_bound ? std::min(*b1_bound, *c.max_b1) : *c.max_b1;

  std::vector<std::vector<Graph>> layers(c.max_edges + 1);
  layers[0].push_back(Graph());
  for (int m = 1; m <= c.max_edges; ++m) {
    std::map<std::string, Graph> found;
    for (const Graph& g : layers[m - 1]) {
      const int n = g.num_core_vertices();
      std::vector<Edge> options;
      for (int a = 0; a < n; ++a) {
        for (int b = a; b <= n; ++b) options.push_back({a, b});
      }
      options.push_back({n, n});
      options.push_back({n, n + 1});
      for (const Edge& e : options) {
        if (c.no_tadpoles && e.is_loop()) continue;
        int nv = std::max({n, e.u + 1, e.v + 1});
        if (c.max_vertices && nv > *c.max_vertices) continue;
        std::vector<Edge> edges = g.edges();
        edges.push_back(e);
        Graph h(nv, std::move(edges));
        if (b1_bound && first_betti(h) > *b1_bound) continue;
        CanonicalForm cf = canonical_form(h);
        found.try_emplace(cf.key, std::move(cf.graph));
      }
    }
    for (auto& [key, g] : found) layers[m].push_back(std::move(g));
  }

  std::vector<Graph> out;
  for (int m = 0; m <= c.max_edges; ++m) {
    for (const Graph& core : layers[m]) {
      if (!core_admissible(core, c)) continue;
      for (int iso = 0; iso <= c.max_isolated; ++iso) {
        if (c.max_vertices && core.num_core_vertices() + iso > *c.max_vertices) break;
        if (c.min_valence > 0 && iso > 0) break;
        Graph g(core.num_core_vertices(), core.edges(), iso);
        if (c.connected && g.num_components() != 1) continue;
        out.push_back(std::move(g));
      }
    }
  }
  return out;
}

}  // namespace

std::string EnumerationConstraints::describe() const {
  std::ostringstream os;
  os << "max_edges=" << max_edges << ";min_edges=" << min_edges << ";connected=" << connected
     << ";min_valence=" << min_valence << ";no_tadpoles=" << no_tadpoles
     << ";max_isolated=" << max_isolated;
  if (fixed_b1) os << ";fixed_b1=" << *fixed_b1;
  if (max_b1) os << ";max_b1=" << *max_b1;
  if (max_vertices) os << ";max_vertices=" << *max_vertices;
  return os.str();
}

std::vector<Graph> enumerate_graphs(const EnumerationConstraints& c, const std::string& cache_dir) {
  if (c.max_edges < 0) throw GraphError("max_edges must be nonnegative");
  namespace fs = std::filesystem;
  fs::path file;
  if (!cache_dir.empty()) {
    std::ostringstream name;
    name << "enum-" << std::hex << fnv1a(c.describe()) << ".txt";
    file = fs::path(cache_dir) / name.str();
    std::ifstream in(file);
    std::string header;
    if (in && std::getline(in, header) && header == "# " + c.describe()) {
      std::vector<Graph> out;
      std::string line;
      while (std::getline(in, line)) {
        if (!line.empty()) out.push_back(parse_graph(line));
      }
      return out;
    }
  }
  std::vector<Graph> out = generate(c);
  if (!file.empty()) {
    fs::create_directories(file.parent_path());
    fs::path tmp = file;
    tmp += ".tmp";
    {
      std::ofstream os(tmp);
      os << "# " << c.describe() << '\n';
      for (const Graph& g : out) os << format_graph(g) << '\n';
    }
    fs::rename(tmp, file);
  }
  return out;
}

}  // namespace gss
