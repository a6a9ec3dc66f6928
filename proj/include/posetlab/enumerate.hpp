#pragma once

#include <optional>

#include "posetlab/canonical.hpp"

namespace posetlab {

// One canonical representative per isomorphism class, sorted by (v, e, code).
std::vector<Graph> graphs_on(int n);                       // exactly n vertices
std::vector<Graph> graphs_up_to(int n);                    // 1..n vertices
std::vector<Graph> isolated_free_up_to_edges(int max_edges);
std::vector<Graph> isolated_free_up_to_vertices(int max_vertices);
std::vector<Graph> trees_on(int n);
std::vector<Graph> trees_up_to(int n);

struct EnumerateOptions {
  std::optional<int> max_vertices;
  std::optional<int> max_edges;
  bool no_isolated = false;
};

// With no_isolated: all isolated-vertex-free classes within the bounds.
// Without: all classes on exactly max_vertices vertices with e <= max_edges.
std::vector<Graph> enumerate_graphs(const EnumerateOptions& opts);

}  // namespace posetlab
