#include "posetlab/poset.hpp"

#include <algorithm>
#include <set>

namespace posetlab {

int LabeledPoset::unique_minimal() const {
  int found = -1;
  for (int i = 0; i < n; ++i) {
    bool minimal = true;
    for (int j = 0; j < n && minimal; ++j)
      if (j != i && leq[j][i]) minimal = false;
    if (minimal) {
      if (found >= 0) fail("malformed-poset", "no unique minimal element");
      found = i;
    }
  }
  if (found < 0) fail("malformed-poset", "no minimal element");
  return found;
}

int LabeledPoset::unique_maximal() const {
  int found = -1;
  for (int i = 0; i < n; ++i) {
    bool maximal = true;
    for (int j = 0; j < n && maximal; ++j)
      if (j != i && leq[i][j]) maximal = false;
    if (maximal) {
      if (found >= 0) fail("malformed-poset", "no unique maximal element");
      found = i;
    }
  }
  if (found < 0) fail("malformed-poset", "no maximal element");
  return found;
}

namespace {

LabeledPoset poset_from_classes(std::vector<Graph> reps, LabeledPoset::Kind kind) {
  std::sort(reps.begin(), reps.end(),
            [](const Graph& a, const Graph& b) { return graph_order_key(a) < graph_order_key(b); });
  LabeledPoset p;
  p.kind = kind;
  p.n = static_cast<int>(reps.size());
  p.leq.assign(p.n, std::vector<char>(p.n, 0));
  for (int j = 0; j < p.n; ++j) {
    const auto& hist = kind == LabeledPoset::Kind::Edge ? edge_histogram(reps[j]) : induced_histogram(reps[j]);
    for (int i = 0; i < p.n; ++i) {
      long long c;
      if (i == j) {
        c = 1;
      } else if (kind == LabeledPoset::Kind::Edge) {
        auto it = hist.find(canonical_code(reps[i]));
        c = it == hist.end() ? 0 : it->second;
      } else {
        auto it = hist.find(canonical_code(reps[i]));
        c = it == hist.end() ? 0 : it->second;
      }
      if (c > 0) {
        p.leq[i][j] = 1;
        p.labels[{i, j}] = c;
      }
    }
  }
  p.codes.reserve(p.n);
  p.reps.reserve(p.n);
  for (const Graph& g : reps) {
    p.codes.push_back(canonical_code(g));
    p.reps.push_back(g);
  }
  p.types.assign(p.n, std::nullopt);
  return p;
}

}  // namespace

LabeledPoset build_induced_poset(const Graph& g) {
  if (g.edge_count() == 0) fail("empty-graph", "induced subgraph poset needs at least one edge");
  std::set<std::string> seen;
  std::vector<Graph> reps{Graph(1)};
  seen.insert(Graph(1).key());
  uint32_t full = g.full_mask();
  for (uint32_t mask = 1; mask <= full; ++mask) {
    Graph h = g.induced(mask);
    if (h.edge_count() == 0) continue;
    Graph c = canonical_form(h);
    if (seen.insert(c.key()).second) reps.push_back(c);
  }
  return poset_from_classes(std::move(reps), LabeledPoset::Kind::Induced);
}

LabeledPoset build_edge_poset(const Graph& g) {
  if (g.edge_count() == 0) fail("empty-graph", "edge subgraph poset needs at least one edge");
  std::set<std::string> seen;
  std::vector<Graph> reps;
  auto es = g.edges();
  int m = static_cast<int>(es.size());
  for (uint32_t sub = 1; sub < (1u << m); ++sub) {
    std::vector<std::pair<int, int>> sel;
    for (int i = 0; i < m; ++i)
      if ((sub >> i) & 1u) sel.push_back(es[i]);
    Graph c = canonical_form(g.edge_subgraph(sel));
    if (seen.insert(c.key()).second) reps.push_back(c);
  }
  return poset_from_classes(std::move(reps), LabeledPoset::Kind::Edge);
}

namespace {

// Iterated signature refinement over the labelled relation; returns dense
// invariant colours ordered by signature value.
std::vector<int> refine_poset_colors(const LabeledPoset& p, std::vector<int> color) {
  const int n = p.n;
  while (true) {
    std::vector<std::pair<std::vector<long long>, int>> sig(n);
    for (int i = 0; i < n; ++i) {
      std::vector<long long> s{color[i]};
      std::vector<std::pair<long long, long long>> down, up;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        if (p.leq[j][i]) down.push_back({p.label(j, i), color[j]});
        if (p.leq[i][j]) up.push_back({p.label(i, j), color[j]});
      }
      std::sort(down.begin(), down.end());
      std::sort(up.begin(), up.end());
      s.push_back(static_cast<long long>(down.size()));
      for (auto& [l, c] : down) {
        s.push_back(l);
        s.push_back(c);
      }
      s.push_back(-1);
      for (auto& [l, c] : up) {
        s.push_back(l);
        s.push_back(c);
      }
      sig[i] = {std::move(s), i};
    }
    std::map<std::vector<long long>, int> rank;
    for (auto& [s, i] : sig) rank.emplace(s, 0);
    int next = 0;
    for (auto& [s, r] : rank) r = next++;
    bool changed = false;
    for (auto& [s, i] : sig) {
      int c = rank[s];
      if (c != color[i]) changed = true;
      color[i] = c;
    }
    if (!changed || next == n) return color;
  }
}

bool mapping_consistent(const LabeledPoset& a, const LabeledPoset& b, const std::vector<int>& img,
                        int i) {
  for (int j = 0; j <= i; ++j) {
    if (a.leq[i][j] != b.leq[img[i]][img[j]]) return false;
    if (a.leq[j][i] != b.leq[img[j]][img[i]]) return false;
    if (a.label(i, j) != b.label(img[i], img[j])) return false;
    if (a.label(j, i) != b.label(img[j], img[i])) return false;
  }
  return true;
}

// DFS over images in ascending order; first full solution is the
// lexicographically least image vector. all=true collects every solution.
void search_bijections(const LabeledPoset& a, const LabeledPoset& b, bool all,
                       std::vector<std::vector<int>>& out) {
  if (a.n != b.n) return;
  const int n = a.n;
  std::vector<int> ca = refine_poset_colors(a, std::vector<int>(n, 0));
  std::vector<int> cb = refine_poset_colors(b, std::vector<int>(n, 0));
  {
    std::vector<int> ha = ca, hb = cb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return;
  }
  std::vector<int> img(n, -1);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == n) {
      out.push_back(img);
      return !all;
    }
    for (int j = 0; j < n; ++j) {
      if (used[j] || ca[i] != cb[j]) continue;
      img[i] = j;
      if (mapping_consistent(a, b, img, i)) {
        used[j] = 1;
        if (self(self, i + 1)) return true;
        used[j] = 0;
      }
      img[i] = -1;
    }
    return false;
  };
  rec(rec, 0);
}

}  // namespace

std::optional<std::vector<int>> poset_isomorphic(const LabeledPoset& a, const LabeledPoset& b) {
  std::vector<std::vector<int>> out;
  search_bijections(a, b, false, out);
  if (out.empty()) return std::nullopt;
  return out.front();
}

std::vector<std::vector<int>> poset_automorphisms(const LabeledPoset& p) {
  std::vector<std::vector<int>> out;
  search_bijections(p, p, true, out);
  std::sort(out.begin(), out.end());
  return out;  // identity is lexicographically least, hence first
}

std::string poset_canonical_key(const LabeledPoset& p) {
  const int n = p.n;
  std::string best;
  bool has_best = false;
  auto emit = [&](const std::vector<int>& order) {
    std::string s;
    s.reserve(n * n * 4);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        long long l = p.leq[order[i]][order[j]] ? p.label(order[i], order[j]) : -1;
        for (int b = 0; b < 8; ++b) s.push_back(static_cast<char>((l >> (8 * b)) & 0xff));
      }
    if (!has_best || s < best) {
      best = std::move(s);
      has_best = true;
    }
  };
  auto rec = [&](auto&& self, std::vector<int> color) -> void {
    color = refine_poset_colors(p, std::move(color));
    int maxc = n == 0 ? -1 : *std::max_element(color.begin(), color.end());
    if (maxc == n - 1) {
      std::vector<int> order(n);
      for (int i = 0; i < n; ++i) order[color[i]] = i;
      emit(order);
      return;
    }
    std::vector<int> count(maxc + 1, 0);
    for (int i = 0; i < n; ++i) ++count[color[i]];
    int target = 0;
    while (count[target] <= 1) ++target;
    for (int i = 0; i < n; ++i) {
      if (color[i] != target) continue;
      std::vector<int> next(n);
      for (int j = 0; j < n; ++j) next[j] = 2 * color[j] + (j == i ? 0 : 1);
      self(self, std::move(next));
    }
  };
  if (n == 0) return {};
  rec(rec, std::vector<int>(n, 0));
  std::string out;
  out.push_back(static_cast<char>(n));
  out += best;
  return out;
}

std::vector<int> element_vertex_counts(const LabeledPoset& p) {
  int k1 = p.unique_minimal();
  std::vector<int> v(p.n, 0);
  for (int i = 0; i < p.n; ++i) {
    if (i == k1) {
      v[i] = 1;
      continue;
    }
    long long c = p.label(k1, i);
    if (c <= 0) fail("malformed-poset", "minimal element not below every element");
    v[i] = static_cast<int>(c);
  }
  return v;
}

std::vector<bool> connected_elements(const LabeledPoset& p) {
  std::vector<int> v = element_vertex_counts(p);
  const int n = p.n;
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return v[a] < v[b]; });
  std::vector<bool> conn(n, false);
  for (int i : order) {
    if (v[i] <= 2) {
      conn[i] = true;  // one-vertex class or K_2
      continue;
    }
    // a graph is connected iff at least two vertex-deleted subgraphs are
    long long cnt = 0;
    for (int j = 0; j < n; ++j) {
      if (j == i || v[j] != v[i] - 1 || !p.leq[j][i]) continue;
      if (conn[j]) cnt += p.label(j, i);
    }
    conn[i] = cnt >= 2;
  }
  return conn;
}

bool is_connected_from_poset(const LabeledPoset& p) {
  return connected_elements(p)[p.unique_maximal()];
}

}  // namespace posetlab
