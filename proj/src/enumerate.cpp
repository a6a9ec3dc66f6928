#include "posetlab/enumerate.hpp"

#include <algorithm>
#include <set>

namespace posetlab {

namespace {

void sort_canonical(std::vector<Graph>& gs) {
  std::sort(gs.begin(), gs.end(),
            [](const Graph& a, const Graph& b) { return graph_order_key(a) < graph_order_key(b); });
}

std::vector<Graph> dedup(const std::vector<Graph>& raw) {
  std::set<std::string> seen;
  std::vector<Graph> out;
  for (const Graph& g : raw) {
    Graph c = canonical_form(g);
    if (seen.insert(c.key()).second) out.push_back(c);
  }
  sort_canonical(out);
  return out;
}

}  // namespace

std::vector<Graph> graphs_on(int n) {
  if (n < 0) fail("invalid-input", "negative vertex count");
  if (n == 0) return {Graph(0)};
  static ConcurrentMemo<int, std::vector<Graph>> cache;
  return cache.get_or_compute(n, [&] {
    // extend each (n-1)-class by one vertex attached to every neighbour subset
    std::vector<Graph> prev = graphs_on(n - 1);
    std::vector<Graph> raw;
    for (const Graph& g : prev) {
      for (uint32_t nb = 0; nb < (1u << (n - 1)); ++nb) {
        Graph h(n);
        for (auto [u, v] : g.edges()) h.add_edge(u, v);
        for (int u = 0; u < n - 1; ++u)
          if ((nb >> u) & 1u) h.add_edge(u, n - 1);
        raw.push_back(h);
      }
    }
    return dedup(raw);
  });
}

std::vector<Graph> graphs_up_to(int n) {
  std::vector<Graph> out;
  for (int k = 1; k <= n; ++k) {
    auto gs = graphs_on(k);
    out.insert(out.end(), gs.begin(), gs.end());
  }
  sort_canonical(out);
  return out;
}

namespace {

// Isolated-free graphs with exactly m edges from those with m-1, adding one
// edge between existing vertices, a pendant edge, or a disjoint edge.
std::vector<Graph> isolated_free_exact_edges(int m) {
  if (m <= 0) fail("invalid-input", "edge count must be positive");
  if (m == 1) return {matching_graph(1)};
  static ConcurrentMemo<int, std::vector<Graph>> cache;
  return cache.get_or_compute(m, [&] {
    std::vector<Graph> prev = isolated_free_exact_edges(m - 1);
    std::vector<Graph> raw;
    for (const Graph& g : prev) {
      int n = g.vertex_count();
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          if (g.has_edge(u, v)) continue;
          Graph h = g;
          h.add_edge(u, v);
          raw.push_back(h);
        }
      for (int u = 0; u < n; ++u) {
        Graph h(n + 1);
        for (auto [a, b] : g.edges()) h.add_edge(a, b);
        h.add_edge(u, n);
        raw.push_back(h);
      }
      raw.push_back(g.disjoint_union(matching_graph(1)));
    }
    return dedup(raw);
  });
}

}  // namespace

std::vector<Graph> isolated_free_up_to_edges(int max_edges) {
  std::vector<Graph> out;
  for (int m = 1; m <= max_edges; ++m) {
    auto gs = isolated_free_exact_edges(m);
    out.insert(out.end(), gs.begin(), gs.end());
  }
  sort_canonical(out);
  return out;
}

std::vector<Graph> isolated_free_up_to_vertices(int max_vertices) {
  std::vector<Graph> out;
  for (int n = 2; n <= max_vertices; ++n)
    for (const Graph& g : graphs_on(n))
      if (!g.has_isolated_vertex() && g.edge_count() > 0) out.push_back(g);
  sort_canonical(out);
  return out;
}

std::vector<Graph> trees_on(int n) {
  if (n < 1) fail("invalid-input", "trees need at least one vertex");
  if (n == 1) return {Graph(1)};
  static ConcurrentMemo<int, std::vector<Graph>> cache;
  return cache.get_or_compute(n, [&] {
    std::vector<Graph> prev = trees_on(n - 1);
    std::vector<Graph> raw;
    for (const Graph& t : prev)
      for (int u = 0; u < n - 1; ++u) {
        Graph h(n);
        for (auto [a, b] : t.edges()) h.add_edge(a, b);
        h.add_edge(u, n - 1);
        raw.push_back(h);
      }
    return dedup(raw);
  });
}

std::vector<Graph> trees_up_to(int n) {
  std::vector<Graph> out;
  for (int k = 1; k <= n; ++k) {
    auto ts = trees_on(k);
    out.insert(out.end(), ts.begin(), ts.end());
  }
  sort_canonical(out);
  return out;
}

std::vector<Graph> enumerate_graphs(const EnumerateOptions& opts) {
  if (opts.max_vertices && *opts.max_vertices < 0) fail("invalid-input", "negative bound");
  if (opts.max_edges && *opts.max_edges < 0) fail("invalid-input", "negative bound");
  std::vector<Graph> out;
  if (opts.no_isolated) {
    std::vector<Graph> base;
    if (opts.max_edges) {
      base = isolated_free_up_to_edges(*opts.max_edges);
    } else if (opts.max_vertices) {
      base = isolated_free_up_to_vertices(*opts.max_vertices);
    } else {
      fail("invalid-input", "enumeration needs a vertex or edge bound");
    }
    for (const Graph& g : base) {
      if (opts.max_vertices && g.vertex_count() > *opts.max_vertices) continue;
      out.push_back(g);
    }
  } else {
    if (!opts.max_vertices) fail("invalid-input", "enumeration needs a vertex bound");
    for (const Graph& g : graphs_on(*opts.max_vertices)) {
      if (opts.max_edges && g.edge_count() > *opts.max_edges) continue;
      out.push_back(g);
    }
  }
  sort_canonical(out);
  return out;
}

}  // namespace posetlab
