#include "posetlab/lattice.hpp"

#include <algorithm>
#include <set>

namespace posetlab {

int FoldedLattice::bottom() const {
  for (int i = 0; i < n; ++i)
    if (ranks[i] == 0) return i;
  fail("malformed-poset", "lattice has no bottom element");
}

int FoldedLattice::top() const {
  int found = -1;
  for (int i = 0; i < n; ++i) {
    bool maximal = true;
    for (int j = 0; j < n && maximal; ++j)
      if (j != i && leq[i][j]) maximal = false;
    if (maximal) {
      if (found >= 0) fail("malformed-poset", "lattice has no unique maximal element");
      found = i;
    }
  }
  if (found < 0) fail("malformed-poset", "lattice has no maximal element");
  return found;
}

LatticeLabeling FoldedLattice::labeling() const {
  bool any_code = false, any_type = false;
  for (const auto& c : codes) any_code |= c.has_value();
  for (const auto& t : types) any_type |= t.has_value();
  if (any_code) return LatticeLabeling::Full;
  if (any_type) return LatticeLabeling::Partial;
  return LatticeLabeling::Abstract;
}

std::vector<int> FoldedLattice::height_ranks() const {
  std::vector<int> h(n, 0);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  // longest chain: process by in-degree topological sweep over leq
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && leq[i][j] && h[j] < h[i] + 1) {
          h[j] = h[i] + 1;
          changed = true;
        }
  }
  return h;
}

FoldedLattice build_folded_lattice(const Graph& g) {
  if (g.vertex_count() < 1) fail("invalid-input", "lattice needs at least one vertex");
  const Graph cg = canonical_form(g);
  const int d = cg.vertex_count();

  const auto& hist = fold_histogram(cg);
  struct Elem {
    Graph rep;
    CanonicalCode code;
    long long mult;
  };
  std::vector<Elem> elems;
  for (const auto& [code, mult] : hist) elems.push_back({graph_from_code(code), code, mult});
  // sort by non-increasing component count, then canonical order
  std::sort(elems.begin(), elems.end(), [](const Elem& a, const Elem& b) {
    int ca = a.rep.component_count(), cb = b.rep.component_count();
    if (ca != cb) return ca > cb;
    return graph_order_key(a.rep) < graph_order_key(b.rep);
  });

  FoldedLattice l;
  l.n = static_cast<int>(elems.size());
  l.leq.assign(l.n, std::vector<char>(l.n, 0));
  for (int j = 0; j < l.n; ++j) {
    const auto& hj = fold_histogram(elems[j].rep);
    for (int i = 0; i < l.n; ++i) {
      long long c;
      if (i == j) {
        c = 1;
      } else {
        auto it = hj.find(elems[i].code);
        c = it == hj.end() ? 0 : it->second;
      }
      if (c > 0) {
        l.leq[i][j] = 1;
        l.labels[{i, j}] = c;
      }
    }
  }
  for (const Elem& e : elems) {
    l.reps.push_back(e.rep);
    l.codes.push_back(e.code);
    IntPartition lambda;
    for (uint32_t m : e.rep.component_masks()) lambda.push_back(__builtin_popcount(m));
    std::sort(lambda.begin(), lambda.end(), std::greater<int>());
    l.lambdas.push_back(lambda);
    l.ranks.push_back(d - e.rep.component_count());
  }
  l.types.assign(l.n, std::nullopt);
  l.name_sizes.clear();
  return l;
}

PartitionDeck partition_deck(const Graph& g) {
  if (g.vertex_count() < 1) fail("invalid-input", "partition deck needs at least one vertex");
  PartitionDeck deck;
  for (const auto& cells : connected_partitions(g)) {
    IntPartition lambda;
    for (uint32_t c : cells) lambda.push_back(__builtin_popcount(c));
    std::sort(lambda.begin(), lambda.end(), std::greater<int>());
    ++deck[lambda];
  }
  return deck;
}

std::vector<long long> mobius_table(const FoldedLattice& l) {
  std::vector<long long> mu(l.n, 0);
  std::vector<int> order(l.n);
  for (int i = 0; i < l.n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return l.ranks[a] < l.ranks[b]; });
  int bottom = l.bottom();
  for (int i : order) {
    if (i == bottom) {
      mu[i] = 1;
      continue;
    }
    long long sum = 0;
    for (int k = 0; k < l.n; ++k) {
      if (k == i || !l.leq[k][i]) continue;
      if (l.ranks[k] >= l.ranks[i]) fail("malformed-poset", "rank order violated");
      sum = checked_add(sum, checked_mul(mu[k], l.label(k, i)));
    }
    long long self = l.label(i, i);
    if (self <= 0 || (-sum) % self != 0)
      fail("inconsistent-labels", "mobius recursion unsolvable in integers");
    mu[i] = -sum / self;
  }
  return mu;
}

namespace {

// Names for the connected components appearing across all elements, ordered
// by (vertex count, canonical code); name 0 is the single vertex.
FoldedLattice make_partial(const FoldedLattice& l) {
  std::map<std::string, int> name_of;
  std::vector<std::pair<std::string, Graph>> comps;
  for (const auto& rep : l.reps) {
    for (const Graph& c : components(*rep)) {
      std::string key = graph_order_key(c);
      if (!name_of.count(key)) {
        name_of[key] = 0;
        comps.push_back({key, c});
      }
    }
  }
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  FoldedLattice out = l;
  out.name_sizes.clear();
  for (size_t i = 0; i < comps.size(); ++i) {
    name_of[comps[i].first] = static_cast<int>(i);
    out.name_sizes.push_back(comps[i].second.vertex_count());
  }
  out.types.assign(l.n, std::nullopt);
  for (int i = 0; i < l.n; ++i) {
    std::map<int, int> counts;
    for (const Graph& c : components(*l.reps[i])) ++counts[name_of[graph_order_key(c)]];
    out.types[i] = NameMultiset(counts.begin(), counts.end());
  }
  out.reps.assign(l.n, std::nullopt);
  out.codes.assign(l.n, std::nullopt);
  return out;
}

}  // namespace

FoldedLattice relabel(const FoldedLattice& l, LatticeLabeling mode) {
  LatticeLabeling cur = l.labeling();
  auto strength = [](LatticeLabeling m) {
    return m == LatticeLabeling::Full ? 2 : m == LatticeLabeling::Partial ? 1 : 0;
  };
  if (strength(mode) > strength(cur))
    fail("labeling-strength", "cannot strengthen a lattice labelling");
  if (mode == cur) return l;
  if (mode == LatticeLabeling::Partial) return make_partial(l);
  FoldedLattice out = l;
  out.reps.assign(l.n, std::nullopt);
  out.codes.assign(l.n, std::nullopt);
  out.types.assign(l.n, std::nullopt);
  out.lambdas.assign(l.n, std::nullopt);
  out.name_sizes.clear();
  return out;
}

LabeledPoset lattice_as_poset(const FoldedLattice& l) {
  LabeledPoset p;
  p.kind = LabeledPoset::Kind::Generic;
  p.n = l.n;
  p.leq = l.leq;
  p.labels = l.labels;
  p.codes = l.codes;
  p.reps = l.reps;
  p.types = l.types;
  return p;
}

std::string lattice_canonical_key(const FoldedLattice& l) {
  return poset_canonical_key(lattice_as_poset(l));
}

bool typed_lattice_isomorphic(const FoldedLattice& a, const FoldedLattice& b) {
  if (a.n != b.n) return false;
  LabeledPoset pa = lattice_as_poset(a).anonymized();
  LabeledPoset pb = lattice_as_poset(b).anonymized();
  // search all order+label isomorphisms; accept one under which element types
  // agree after some name bijection
  std::vector<std::vector<int>> isos;
  {
    // reuse automorphism machinery: collect all isomorphisms via product of
    // one isomorphism with automorphisms of a
    auto one = poset_isomorphic(pa, pb);
    if (!one) return false;
    if (a.labeling() == LatticeLabeling::Abstract || b.labeling() == LatticeLabeling::Abstract)
      return true;
    for (const auto& aut : poset_automorphisms(pa)) {
      std::vector<int> composed(a.n);
      for (int i = 0; i < a.n; ++i) composed[i] = (*one)[aut[i]];
      isos.push_back(composed);
    }
  }
  // Every name has a unique padded element (the name plus isolated vertices),
  // so an element bijection induces the name bijection; derive and verify it.
  auto padded_name = [](const FoldedLattice& l, int elem) -> int {
    const NameMultiset& t = *l.types[elem];
    int name = -1;
    for (auto [nm, cnt] : t) {
      if (nm == 0) continue;
      if (cnt != 1 || name != -1) return -1;
      name = nm;
    }
    return name;
  };
  for (const auto& iso : isos) {
    std::map<int, int> name_map{{0, 0}};
    bool ok = true;
    for (int i = 0; i < a.n && ok; ++i) {
      if (!a.types[i] || !b.types[iso[i]]) {
        ok = false;
        break;
      }
      int an = padded_name(a, i);
      if (an < 0) continue;
      int bn = padded_name(b, iso[i]);
      if (bn < 0 || a.name_sizes[an] != b.name_sizes[bn]) {
        ok = false;
        break;
      }
      auto [it, inserted] = name_map.emplace(an, bn);
      if (!inserted && it->second != bn) ok = false;
    }
    if (!ok) continue;
    for (int i = 0; i < a.n && ok; ++i) {
      NameMultiset mapped;
      for (auto [nm, cnt] : *a.types[i]) {
        auto it = name_map.find(nm);
        if (it == name_map.end()) {
          ok = false;
          break;
        }
        mapped.emplace_back(it->second, cnt);
      }
      std::sort(mapped.begin(), mapped.end());
      if (ok && mapped != *b.types[iso[i]]) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace posetlab
