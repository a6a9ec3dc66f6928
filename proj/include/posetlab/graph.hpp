#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "posetlab/util.hpp"

namespace posetlab {

// Finite simple graph on vertices {0..n-1}, adjacency stored as bitmasks.
class Graph {
 public:
  static constexpr int kMaxVertices = 31;

  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(n, 0u) {
    if (n < 0 || n > kMaxVertices) fail("invalid-input", "vertex count out of range");
  }
  Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  int vertex_count() const { return n_; }
  int edge_count() const {
    int e = 0;
    for (int v = 0; v < n_; ++v) e += __builtin_popcount(adj_[v] & ((1u << v) - 1));
    return e;
  }

  void add_edge(int u, int v) {
    if (u == v) fail("invalid-input", "loops are not allowed");
    if (u < 0 || v < 0 || u >= n_ || v >= n_) fail("invalid-input", "edge endpoint out of range");
    adj_[u] |= 1u << v;
    adj_[v] |= 1u << u;
  }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
  uint32_t neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return __builtin_popcount(adj_[v]); }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 1; v < n_; ++v) {
      uint32_t m = adj_[v] & ((1u << v) - 1);
      while (m) {
        int u = __builtin_ctz(m);
        m &= m - 1;
        out.emplace_back(u, v);
      }
    }
    return out;
  }

  uint32_t full_mask() const { return n_ == 0 ? 0u : (n_ == 31 ? 0x7fffffffu : (1u << n_) - 1); }

  // Connected component containing `start`, restricted to `allowed`.
  uint32_t reach(int start, uint32_t allowed) const {
    uint32_t seen = 1u << start, frontier = seen;
    while (frontier) {
      uint32_t next = 0;
      while (frontier) {
        int v = __builtin_ctz(frontier);
        frontier &= frontier - 1;
        next |= adj_[v] & allowed & ~seen;
      }
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  bool mask_connected(uint32_t mask) const {
    if (mask == 0) return false;
    return reach(__builtin_ctz(mask), mask) == mask;
  }
  bool connected() const { return n_ <= 1 || mask_connected(full_mask()); }

  std::vector<uint32_t> component_masks() const {
    std::vector<uint32_t> comps;
    uint32_t left = full_mask();
    while (left) {
      uint32_t c = reach(__builtin_ctz(left), left);
      comps.push_back(c);
      left &= ~c;
    }
    return comps;
  }
  int component_count() const { return static_cast<int>(component_masks().size()); }

  // Induced subgraph on `mask`, vertices relabeled in ascending order.
  Graph induced(uint32_t mask) const {
    int k = __builtin_popcount(mask);
    Graph g(k);
    std::vector<int> idx(n_, -1);
    int next = 0;
    for (int v = 0; v < n_; ++v)
      if ((mask >> v) & 1u) idx[v] = next++;
    for (int v = 0; v < n_; ++v) {
      if (idx[v] < 0) continue;
      uint32_t m = adj_[v] & mask & ((1u << v) - 1);
      while (m) {
        int u = __builtin_ctz(m);
        m &= m - 1;
        g.add_edge(idx[u], idx[v]);
      }
    }
    return g;
  }

  // Subgraph spanned by an edge subset, isolated vertices dropped.
  Graph edge_subgraph(const std::vector<std::pair<int, int>>& es) const {
    uint32_t mask = 0;
    for (auto [u, v] : es) mask |= (1u << u) | (1u << v);
    int k = __builtin_popcount(mask);
    Graph g(k);
    std::vector<int> idx(n_, -1);
    int next = 0;
    for (int v = 0; v < n_; ++v)
      if ((mask >> v) & 1u) idx[v] = next++;
    for (auto [u, v] : es) g.add_edge(idx[u], idx[v]);
    return g;
  }

  Graph without_isolated() const {
    uint32_t mask = 0;
    for (int v = 0; v < n_; ++v)
      if (adj_[v]) mask |= 1u << v;
    return induced(mask);
  }
  bool has_isolated_vertex() const {
    for (int v = 0; v < n_; ++v)
      if (!adj_[v]) return true;
    return n_ == 0 ? false : false;
  }

  Graph disjoint_union(const Graph& other) const {
    Graph g(n_ + other.n_);
    for (auto [u, v] : edges()) g.add_edge(u, v);
    for (auto [u, v] : other.edges()) g.add_edge(u + n_, v + n_);
    return g;
  }

  // perm[old] = new.
  Graph relabeled(const std::vector<int>& perm) const {
    Graph g(n_);
    for (auto [u, v] : edges()) g.add_edge(perm[u], perm[v]);
    return g;
  }

  // Spanning subgraph keeping only edges inside the given cells.
  Graph partition_spanning(const std::vector<uint32_t>& cells) const {
    Graph g(n_);
    for (uint32_t cell : cells)
      for (auto [u, v] : edges())
        if (((cell >> u) & 1u) && ((cell >> v) & 1u)) g.add_edge(u, v);
    return g;
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

  // Raw byte key of the labeled graph, for memo tables.
  std::string key() const {
    std::string s;
    s.reserve(1 + 4 * n_);
    s.push_back(static_cast<char>(n_));
    for (int v = 0; v < n_; ++v)
      for (int b = 0; b < 4; ++b) s.push_back(static_cast<char>((adj_[v] >> (8 * b)) & 0xff));
    return s;
  }

 private:
  int n_ = 0;
  std::vector<uint32_t> adj_;
};

Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);      // K_{1,leaves}
Graph matching_graph(int k);       // k disjoint edges
Graph paw_graph();                 // triangle with a pendant vertex
Graph diamond_graph();             // K_4 minus an edge
Graph fork_graph();                // star K_{1,3} with one edge subdivided
Graph double_star_graph();         // two adjacent centers, two leaves each
Graph pan_graph();                 // C_4 with a pendant vertex

}  // namespace posetlab
