#ifndef GSS_ENUMERATE_HPP
#define GSS_ENUMERATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "gss/graph.hpp"

namespace gss {

struct EnumerationConstraints {
  int max_edges = 0;
  int min_edges = 0;
  bool connected = false;
  int min_valence = 0;
  bool no_tadpoles = false;
  int max_isolated = 0;
  std::optional<int> fixed_b1;
  std::optional<int> max_b1;
  // Bound on num_vertices(); isolated vertices count towards it.
  std::optional<int> max_vertices;

  std::string describe() const;
};

// One canonical representative per isomorphism class, ordered by
// (edge count, canonical key). Zero generators are not filtered here.
// When cache_dir is nonempty the result is read from / written to a text
// file named after a hash of describe().
std::vector<Graph> enumerate_graphs(const EnumerationConstraints& c,
                                    const std::string& cache_dir = "");

}  // namespace gss

#endif
