#include "posetlab/canonical.hpp"

#include <algorithm>
#include <map>

namespace posetlab {

namespace {

ConcurrentMemo<std::string, std::string>& code_cache() {
  static ConcurrentMemo<std::string, std::string> cache;
  return cache;
}

// Iterated colour refinement: colour' = rank of (colour, sorted neighbour
// colours). Dense ids ordered by signature value, so the partition and its
// ordering are isomorphism-invariant.
void refine_colors(const Graph& g, std::vector<int>& color) {
  const int n = g.vertex_count();
  std::vector<std::pair<std::vector<int>, int>> sig(n);
  while (true) {
    for (int v = 0; v < n; ++v) {
      std::vector<int> s{color[v]};
      uint32_t m = g.neighbors(v);
      std::vector<int> nb;
      while (m) {
        int u = __builtin_ctz(m);
        m &= m - 1;
        nb.push_back(color[u]);
      }
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sig[v] = {std::move(s), v};
    }
    std::map<std::vector<int>, int> rank;
    for (auto& [s, v] : sig) rank.emplace(s, 0);
    int next = 0;
    for (auto& [s, r] : rank) r = next++;
    bool changed = false;
    for (auto& [s, v] : sig) {
      int c = rank[s];
      if (c != color[v]) changed = true;
      color[v] = c;
    }
    if (!changed || next == n) return;
  }
}

std::string certificate_for_order(const Graph& g, const std::vector<int>& order) {
  const int n = g.vertex_count();
  std::string bits;
  bits.reserve((n * (n - 1) / 2 + 7) / 8);
  int acc = 0, nb = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(order[i], order[j]) ? 1 : 0);
      if (++nb == 8) {
        bits.push_back(static_cast<char>(acc));
        acc = nb = 0;
      }
    }
  if (nb) bits.push_back(static_cast<char>(acc << (8 - nb)));
  return bits;
}

struct CertSearch {
  const Graph& g;
  std::string best;
  std::vector<int> best_order;
  bool has_best = false;

  // Individualise-and-refine; candidate cells are colour classes, so the leaf
  // set is isomorphism-invariant and min over leaves is canonical.
  void run(std::vector<int> color) {
    const int n = g.vertex_count();
    refine_colors(g, color);
    int maxc = *std::max_element(color.begin(), color.end());
    if (maxc == n - 1) {
      std::vector<int> order(n);
      for (int v = 0; v < n; ++v) order[color[v]] = v;
      std::string cert = certificate_for_order(g, order);
      if (!has_best || cert < best) {
        best = std::move(cert);
        best_order = std::move(order);
        has_best = true;
      }
      return;
    }
    std::vector<int> count(maxc + 1, 0);
    for (int v = 0; v < n; ++v) ++count[color[v]];
    int target = 0;
    while (count[target] <= 1) ++target;
    for (int v = 0; v < n; ++v) {
      if (color[v] != target) continue;
      std::vector<int> next(n);
      for (int u = 0; u < n; ++u) next[u] = 2 * color[u] + (u == v ? 0 : 1);
      run(std::move(next));
    }
  }
};

Graph assemble_canonical(const Graph& g) {
  std::vector<Graph> comps;
  for (uint32_t mask : g.component_masks()) {
    Graph c = g.induced(mask);
    CertSearch search{c};
    search.run(std::vector<int>(c.vertex_count(), 0));
    std::vector<int> perm(c.vertex_count());
    for (int pos = 0; pos < c.vertex_count(); ++pos) perm[search.best_order[pos]] = pos;
    comps.push_back(c.relabeled(perm));
  }
  std::sort(comps.begin(), comps.end(), [](const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count();
    return a.key() < b.key();
  });
  Graph out(0);
  for (const Graph& c : comps) out = out.disjoint_union(c);
  return out;
}

Graph graph_from_key(const std::string& code) {
  int n = static_cast<unsigned char>(code[0]);
  Graph out(n);
  for (int v = 0; v < n; ++v) {
    uint32_t row = 0;
    for (int b = 0; b < 4; ++b)
      row |= static_cast<uint32_t>(static_cast<unsigned char>(code[1 + 4 * v + b])) << (8 * b);
    for (int u = 0; u < v; ++u)
      if ((row >> u) & 1u) out.add_edge(u, v);
  }
  return out;
}

}  // namespace

CanonicalCode canonical_code(const Graph& g) {
  return CanonicalCode{
      code_cache().get_or_compute(g.key(), [&] { return assemble_canonical(g).key(); })};
}

Graph canonical_form(const Graph& g) { return graph_from_key(canonical_code(g).bytes); }

Graph graph_from_code(const CanonicalCode& code) { return graph_from_key(code.bytes); }

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_code(a) == canonical_code(b);
}

std::vector<Graph> components(const Graph& g) {
  std::vector<Graph> out;
  for (uint32_t mask : g.component_masks()) out.push_back(canonical_form(g.induced(mask)));
  std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count();
    return a.key() < b.key();
  });
  return out;
}

std::vector<CanonicalCode> deck(const Graph& g, DeckKind kind) {
  std::vector<CanonicalCode> out;
  if (kind == DeckKind::Vertex) {
    if (g.vertex_count() < 1) fail("invalid-input", "vertex deck needs at least one vertex");
    for (int v = 0; v < g.vertex_count(); ++v)
      out.push_back(canonical_code(g.induced(g.full_mask() & ~(1u << v))));
  } else {
    if (g.edge_count() < 1) fail("invalid-input", "edge deck needs at least one edge");
    auto es = g.edges();
    for (size_t i = 0; i < es.size(); ++i) {
      Graph h(g.vertex_count());
      for (size_t j = 0; j < es.size(); ++j)
        if (j != i) h.add_edge(es[j].first, es[j].second);
      out.push_back(canonical_code(h.without_isolated()));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string graph_order_key(const Graph& g) {
  CanonicalCode c = canonical_code(g);
  std::string key;
  key.push_back(static_cast<char>(g.vertex_count()));
  key.push_back(static_cast<char>(g.edge_count()));
  key += c.bytes;
  return key;
}

}  // namespace posetlab
