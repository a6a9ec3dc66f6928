#include "posetlab/hom.hpp"

#include <algorithm>

namespace posetlab {

long long count_hom(const Graph& g, const Graph& h) {
  const int n = g.vertex_count(), m = h.vertex_count();
  if (n == 0) return 1;
  if (m == 0) return 0;
  // map vertices in order, pruning on edges to already-mapped vertices
  std::vector<int> img(n, -1);
  long long total = 0;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      ++total;
      return;
    }
    uint32_t earlier = g.neighbors(v) & ((1u << v) - 1);
    for (int w = 0; w < m; ++w) {
      bool ok = true;
      uint32_t e = earlier;
      while (e && ok) {
        int u = __builtin_ctz(e);
        e &= e - 1;
        if (!h.has_edge(img[u], w)) ok = false;
      }
      if (!ok) continue;
      img[v] = w;
      self(self, v + 1);
    }
  };
  rec(rec, 0);
  return total;
}

namespace {

long long count_mono_direct(const Graph& g, const Graph& h) {
  const int n = g.vertex_count(), m = h.vertex_count();
  if (n == 0) return 1;
  if (n > m) return 0;
  std::vector<int> img(n, -1);
  uint32_t used = 0;
  long long total = 0;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      ++total;
      return;
    }
    uint32_t earlier = g.neighbors(v) & ((1u << v) - 1);
    for (int w = 0; w < m; ++w) {
      if ((used >> w) & 1u) continue;
      bool ok = true;
      uint32_t e = earlier;
      while (e && ok) {
        int u = __builtin_ctz(e);
        e &= e - 1;
        if (!h.has_edge(img[u], w)) ok = false;
      }
      if (!ok) continue;
      img[v] = w;
      used |= 1u << w;
      self(self, v + 1);
      used &= ~(1u << w);
    }
  };
  rec(rec, 0);
  return total;
}

// quotient by cells; merging adjacent vertices makes a loop, reported via ok
Graph quotient(const Graph& g, const std::vector<uint32_t>& cells, bool& ok) {
  ok = true;
  int k = static_cast<int>(cells.size());
  Graph q(k);
  std::vector<int> cell_of(g.vertex_count(), -1);
  for (int c = 0; c < k; ++c) {
    uint32_t m = cells[c];
    while (m) {
      int v = __builtin_ctz(m);
      m &= m - 1;
      cell_of[v] = c;
    }
  }
  for (auto [u, v] : g.edges()) {
    if (cell_of[u] == cell_of[v]) {
      ok = false;
      return q;
    }
    if (!q.has_edge(cell_of[u], cell_of[v])) q.add_edge(cell_of[u], cell_of[v]);
  }
  return q;
}

long long partition_mobius(const std::vector<uint32_t>& cells) {
  // mu(0, pi) in the partition lattice: product over cells of
  // (-1)^(|c|-1) (|c|-1)!
  long long r = 1;
  for (uint32_t c : cells) {
    int s = __builtin_popcount(c);
    long long f = factorial(s - 1);
    r = checked_mul(r, (s - 1) % 2 == 0 ? f : -f);
  }
  return r;
}

template <class F>
void for_each_set_partition(int n, F&& visit) {
  std::vector<uint32_t> cells;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      visit(cells);
      return;
    }
    const size_t k = cells.size();
    for (size_t i = 0; i < k; ++i) {
      cells[i] |= 1u << v;
      self(self, v + 1);
      cells[i] &= ~(1u << v);
    }
    cells.push_back(1u << v);
    self(self, v + 1);
    cells.pop_back();
  };
  rec(rec, 0);
}

}  // namespace

long long count_mono(const Graph& g, const Graph& h, MonoMethod method) {
  if (method == MonoMethod::Direct) return count_mono_direct(g, h);
  long long total = 0;
  for_each_set_partition(g.vertex_count(), [&](const std::vector<uint32_t>& cells) {
    bool ok;
    Graph q = quotient(g, cells, ok);
    if (!ok) return;  // loop: no homomorphisms into a simple graph
    total = checked_add(total, checked_mul(partition_mobius(cells), count_hom(q, h)));
  });
  return total;
}

std::optional<Graph> distinguishing_witness(const Graph& g1, const Graph& g2,
                                            WitnessDirection dir, int max_n) {
  if (is_isomorphic(g1, g2)) fail("invalid-input", "witness needs non-isomorphic graphs");
  for (int n = 1; n <= max_n; ++n)
    for (const Graph& h : graphs_on(n)) {
      long long a = dir == WitnessDirection::Left ? count_hom(g1, h) : count_hom(h, g1);
      long long b = dir == WitnessDirection::Left ? count_hom(g2, h) : count_hom(h, g2);
      if (a != b) return h;
    }
  return std::nullopt;
}

ConjectureScanReport conjecture_scan(int n) {
  if (n > 5) fail("invalid-input", "scan bound exceeds the configured cap");
  std::vector<Graph> universe{Graph(0)};
  for (int k = 1; k <= n; ++k)
    for (const Graph& g : graphs_on(k)) universe.push_back(g);
  const int u = static_cast<int>(universe.size());
  std::vector<std::vector<long long>> hom(u, std::vector<long long>(u));
  for (int i = 0; i < u; ++i)
    for (int j = 0; j < u; ++j) hom[i][j] = count_hom(universe[i], universe[j]);

  // a valid bijection is an automorphism of the hom matrix, so it preserves
  // iterated signature colours (initially (v, e) as justified pruning)
  std::vector<long long> color(u);
  for (int i = 0; i < u; ++i)
    color[i] = universe[i].vertex_count() * 1000 + universe[i].edge_count();
  {
    std::map<long long, long long> dense;
    for (long long c : color) dense.emplace(c, 0);
    long long next = 0;
    for (auto& [k, v] : dense) v = next++;
    for (auto& c : color) c = dense[c];
  }
  while (true) {
    std::vector<std::vector<long long>> sig(u);
    for (int i = 0; i < u; ++i) {
      std::vector<long long> s{color[i]};
      std::vector<std::pair<long long, long long>> row, col;
      for (int j = 0; j < u; ++j) {
        row.push_back({color[j], hom[i][j]});
        col.push_back({color[j], hom[j][i]});
      }
      std::sort(row.begin(), row.end());
      std::sort(col.begin(), col.end());
      for (auto& [c, v] : row) {
        s.push_back(c);
        s.push_back(v);
      }
      for (auto& [c, v] : col) {
        s.push_back(c);
        s.push_back(v);
      }
      sig[i] = std::move(s);
    }
    std::map<std::vector<long long>, long long> rank;
    for (auto& s : sig) rank.emplace(s, 0);
    long long next = 0;
    for (auto& [k, v] : rank) v = next++;
    bool changed = false;
    for (int i = 0; i < u; ++i) {
      long long c = rank[sig[i]];
      if (c != color[i]) changed = true;
      color[i] = c;
    }
    if (!changed) break;
  }

  ConjectureScanReport report;
  report.max_vertices = n;
  report.universe_size = u;
  report.disclaimer =
      "finite restriction: the bijection domain and all checked pairs are limited to graphs on "
      "at most " +
      std::to_string(n) + " vertices; this is not a proof for the full class of graphs";
  std::vector<int> img(u, -1);
  std::vector<char> used(u, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == u) {
      ++report.checked_bijections;
      bool identity = true;
      for (int k = 0; k < u; ++k)
        if (img[k] != k) identity = false;
      if (!identity) report.surviving_non_identity.push_back(img);
      return;
    }
    for (int j = 0; j < u; ++j) {
      if (used[j] || color[i] != color[j]) continue;
      bool ok = true;
      for (int k = 0; k <= i && ok; ++k) {
        if (img[k] < 0) continue;
        if (hom[i][k] != hom[j][img[k]] || hom[k][i] != hom[img[k]][j]) ok = false;
      }
      if (!ok) continue;
      img[i] = j;
      used[j] = 1;
      self(self, i + 1);
      used[j] = 0;
      img[i] = -1;
    }
  };
  rec(rec, 0);
  return report;
}

}  // namespace posetlab
