#include "posetlab/counting.hpp"

#include <algorithm>

namespace posetlab {

namespace {

using Hist = std::map<CanonicalCode, long long>;

ConcurrentMemo<std::string, Hist>& induced_hist_cache() {
  static ConcurrentMemo<std::string, Hist> cache;
  return cache;
}
ConcurrentMemo<std::string, Hist>& edge_hist_cache() {
  static ConcurrentMemo<std::string, Hist> cache;
  return cache;
}
ConcurrentMemo<std::string, Hist>& fold_hist_cache() {
  static ConcurrentMemo<std::string, Hist> cache;
  return cache;
}
ConcurrentMemo<std::string, long long>& pi_cache() {
  static ConcurrentMemo<std::string, long long> cache;
  return cache;
}

Hist build_induced_histogram(const Graph& g) {
  Hist h;
  uint32_t full = g.full_mask();
  for (uint32_t mask = 1; mask <= full && full; ++mask) ++h[canonical_code(g.induced(mask))];
  return h;
}

Hist build_edge_histogram(const Graph& g) {
  Hist h;
  auto es = g.edges();
  int m = static_cast<int>(es.size());
  for (uint32_t sub = 1; m && sub < (1u << m); ++sub) {
    std::vector<std::pair<int, int>> sel;
    for (int i = 0; i < m; ++i)
      if ((sub >> i) & 1u) sel.push_back(es[i]);
    ++h[canonical_code(g.edge_subgraph(sel))];
  }
  return h;
}

Hist build_fold_histogram(const Graph& g) {
  Hist h;
  for (const auto& cells : connected_partitions(g)) ++h[canonical_code(g.partition_spanning(cells))];
  return h;
}

}  // namespace

const Hist& induced_histogram(const Graph& g) {
  const Graph cf = canonical_form(g);
  return induced_hist_cache().get_or_compute(cf.key(), [&] { return build_induced_histogram(cf); });
}

const Hist& edge_histogram(const Graph& g) {
  const Graph cf = canonical_form(g);
  return edge_hist_cache().get_or_compute(cf.key(), [&] { return build_edge_histogram(cf); });
}

const Hist& fold_histogram(const Graph& g) {
  const Graph cf = canonical_form(g);
  return fold_hist_cache().get_or_compute(cf.key(), [&] { return build_fold_histogram(cf); });
}

long long count_induced(const Graph& f, const Graph& g) {
  if (f.vertex_count() == 0) return 1;
  if (f.vertex_count() > g.vertex_count()) return 0;
  const Hist& h = induced_histogram(g);
  auto it = h.find(canonical_code(f));
  return it == h.end() ? 0 : it->second;
}

long long count_edge_sub(const Graph& f, const Graph& g) {
  if (f.edge_count() == 0) fail("invalid-input", "edge-subgraph counting needs a non-empty pattern");
  if (f.edge_count() > g.edge_count()) return 0;
  const Hist& h = edge_histogram(g);
  auto it = h.find(canonical_code(f.without_isolated()));
  return it == h.end() ? 0 : it->second;
}

std::vector<std::vector<uint32_t>> connected_partitions(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 1) fail("invalid-input", "connected partitions need at least one vertex");
  std::vector<std::vector<uint32_t>> out;
  std::vector<uint32_t> cells;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      for (uint32_t c : cells)
        if (!g.mask_connected(c)) return;
      out.push_back(cells);
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
  return out;
}

long long count_pi_sub(const Graph& f, const Graph& g) {
  if (f.vertex_count() == 0) return 1;
  if (f.vertex_count() > g.vertex_count()) return 0;
  const Graph cg = canonical_form(g);
  const Graph cfold = canonical_form(f);
  std::string key = cg.key() + "|" + cfold.key();
  return pi_cache().get_or_compute(key, [&]() -> long long {
    std::vector<Graph> comps = components(cfold);
    std::vector<std::pair<CanonicalCode, int>> classes;  // non-trivial components
    std::vector<int> class_size;
    int k1_count = 0;
    for (const Graph& c : comps) {
      if (c.vertex_count() == 1) {
        ++k1_count;
        continue;
      }
      CanonicalCode code = canonical_code(c);
      if (!classes.empty() && classes.back().first == code) {
        ++classes.back().second;
      } else {
        classes.emplace_back(code, 1);
        class_size.push_back(c.vertex_count());
      }
    }
    // occurrences: connected induced subgraphs of g matching each class
    std::vector<std::vector<uint32_t>> occ(classes.size());
    uint32_t full = cg.full_mask();
    for (uint32_t mask = 1; mask <= full && full; ++mask) {
      int sz = __builtin_popcount(mask);
      if (sz < 2) continue;
      if (!cg.mask_connected(mask)) continue;
      CanonicalCode code = canonical_code(cg.induced(mask));
      for (size_t i = 0; i < classes.size(); ++i)
        if (class_size[i] == sz && classes[i].first == code) occ[i].push_back(mask);
    }
    long long total = 0;
    // pick multiplicity-many disjoint occurrences per class, index-increasing
    // within a class so unordered families are counted once
    auto rec = [&](auto&& self, size_t ci, int remaining, size_t from, uint32_t used) -> void {
      if (ci == classes.size()) {
        int freev = cg.vertex_count() - __builtin_popcount(used);
        total = checked_add(total, binomial(freev, k1_count));
        return;
      }
      if (remaining == 0) {
        int next_rem = ci + 1 < classes.size() ? classes[ci + 1].second : 0;
        self(self, ci + 1, next_rem, 0, used);
        return;
      }
      for (size_t i = from; i < occ[ci].size(); ++i) {
        if (occ[ci][i] & used) continue;
        self(self, ci, remaining - 1, i + 1, used | occ[ci][i]);
      }
    };
    if (classes.empty()) {
      total = binomial(cg.vertex_count(), k1_count);
    } else {
      rec(rec, 0, classes[0].second, 0, 0);
    }
    return total;
  });
}

}  // namespace posetlab
