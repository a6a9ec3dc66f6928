#include "posetlab/graph.hpp"

namespace posetlab {

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) fail("invalid-input", "cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Graph matching_graph(int k) {
  Graph g(2 * k);
  for (int i = 0; i < k; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

Graph paw_graph() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

Graph diamond_graph() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

Graph fork_graph() { return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}}); }

Graph double_star_graph() { return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}}); }

Graph pan_graph() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}}); }

}  // namespace posetlab
