#ifndef GSS_CANONICAL_HPP
#define GSS_CANONICAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gss/graph.hpp"

namespace gss {

struct CanonicalForm {
  std::string key;
  // Canonical representative; its edges are sorted by (u, v) with u <= v.
  Graph graph;
  // Core vertex v of the input maps to core vertex vertex_relabeling[v].
  std::vector<int> vertex_relabeling;
  // Edge i of the input maps to canonical edge edge_relabeling[i].
  std::vector<EdgeId> edge_relabeling;
};

CanonicalForm canonical_form(const Graph& g);

struct AutomorphismInfo {
  bool all_even = true;
  std::uint64_t group_order = 1;
};

class AutomorphismOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// group_order counts maps of half-edge structures, so parallel edges and
// loop reversals contribute. Throws AutomorphismOverflow above cap.
AutomorphismInfo automorphism_edge_signs(const Graph& g, std::uint64_t cap = 1000000);

// A graph with an edge order, reduced to sign times the canonical
// representative. sign == 0 when an automorphism permutes edges oddly.
struct OrderedGenerator {
  Graph graph;
  int sign = 0;
  std::string canonical_key;

  static OrderedGenerator normalize(const Graph& ordered);
  bool is_zero() const { return sign == 0; }
};

}  // namespace gss

#endif
