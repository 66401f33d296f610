#ifndef GSS_GRAPH_HPP
#define GSS_GRAPH_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gss {

using EdgeId = int;

struct Edge {
  int u = 0;
  int v = 0;
  bool is_loop() const { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A multigraph with loops. Vertices 0..core-1 all carry at least one
// half-edge; vertices without half-edges are kept only as a count.
// The position of an edge in edges() is its place in the edge order.
class Graph {
 public:
  Graph() = default;

  // Any of the num_vertices labels without incident edges joins the
  // isolated count; the remaining labels are compacted in increasing order.
  Graph(int num_vertices, std::vector<Edge> edges, int extra_isolated = 0);

  int num_core_vertices() const { return core_; }
  int num_isolated() const { return iso_; }
  int num_vertices() const { return core_ + iso_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  bool is_empty() const { return core_ == 0 && iso_ == 0; }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const;

  // Valence of each core vertex; a loop contributes 2.
  std::vector<int> valences() const;
  int num_loops() const;

  // Connected components, isolated vertices included.
  int num_components() const;
  // Component index per core vertex, numbered by smallest member.
  std::vector<int> core_components(int* count = nullptr) const;
  bool is_connected() const { return num_components() == 1; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int core_ = 0;
  int iso_ = 0;
  std::vector<Edge> edges_;
};

// Half-edge presentation: vertices are the fixed points of the involution,
// the attachment sends every element to a vertex.
struct HalfEdgeStructure {
  std::vector<int> involution;
  std::vector<int> attachment;
};

HalfEdgeStructure to_half_edges(const Graph& g);
Graph from_half_edges(const HalfEdgeStructure& h);
// Throws GraphError naming the violated condition.
void validate_half_edges(const HalfEdgeStructure& h);

// Result of an edge operation; edge_origin[i] is the parent id of the i-th
// surviving edge, and surviving edges keep their relative order.
struct Surgery {
  Graph graph;
  std::vector<EdgeId> edge_origin;
};

int first_betti(const Graph& g);

Surgery contract(const Graph& g, EdgeId e);
Surgery delete_edge(const Graph& g, EdgeId e);
Surgery restrict_to(const Graph& g, std::span<const EdgeId> gamma);
Surgery quotient(const Graph& g, std::span<const EdgeId> gamma);

// Bitmask forms of restrict/quotient; bit i selects edge i.
Graph restrict_mask(const Graph& g, std::uint64_t mask);
Graph quotient_mask(const Graph& g, std::uint64_t mask);

struct EdgeClass {
  bool is_tadpole = false;
  bool is_bridge = false;
  bool is_bridge_to_nowhere = false;
};
std::vector<EdgeClass> classify_edges(const Graph& g);

// Concatenates edge orders; b's vertices follow a's.
Graph disjoint_union(const Graph& a, const Graph& b);
// Drops the isolated count.
Graph core_of(const Graph& g);

Graph wheel(int spokes);
Graph loop_graph(int n);
Graph interval();
Graph tadpole();
Graph points(int k);
Graph complete_graph(int n);

// Text form: "V=<core> ISO=<isolated> E=u-w,..." with u-u for a tadpole.
std::string format_graph(const Graph& g);
Graph parse_graph(const std::string& text);

}  // namespace gss

#endif
