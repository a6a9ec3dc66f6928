#include "posetlab/kocay.hpp"

#include <algorithm>

namespace posetlab {

long long vcov_direct(const std::vector<Graph>& S, const Graph& h) {
  const uint32_t full = h.full_mask();
  std::vector<std::vector<uint32_t>> cands;
  for (const Graph& f : S) {
    std::vector<uint32_t> c;
    if (f.vertex_count() == 0) {
      c.push_back(0);
    } else {
      for (uint32_t mask = 1; mask <= full && full; ++mask)
        if (__builtin_popcount(mask) == f.vertex_count() && is_isomorphic(h.induced(mask), f))
          c.push_back(mask);
    }
    cands.push_back(std::move(c));
  }
  std::vector<int> rest_capacity(S.size() + 1, 0);
  for (int i = static_cast<int>(S.size()) - 1; i >= 0; --i)
    rest_capacity[i] = rest_capacity[i + 1] + S[i].vertex_count();
  long long total = 0;
  auto rec = [&](auto&& self, size_t i, uint32_t covered) -> void {
    if (__builtin_popcount(full & ~covered) > rest_capacity[i]) return;
    if (i == S.size()) {
      if (covered == full) ++total;
      return;
    }
    for (uint32_t m : cands[i]) self(self, i + 1, covered | m);
  };
  rec(rec, 0, 0);
  return total;
}

PosetCoverCalculator::PosetCoverCalculator(const LabeledPoset& p) : p_(p) {
  v_ = element_vertex_counts(p);
  k1_ = p.unique_minimal();
  if (v_[k1_] != 1) fail("malformed-poset", "minimal element is not the one-vertex class");
  top_ = p.unique_maximal();
}

std::optional<int> PosetCoverCalculator::resolve(const Graph& f) const {
  if (f.edge_count() == 0) return f.vertex_count() == 0 ? std::optional<int>() : -f.vertex_count();
  CanonicalCode code = canonical_code(f);
  for (int i = 0; i < p_.n; ++i)
    if (p_.codes[i] && *p_.codes[i] == code) return i;
  return std::nullopt;
}

long long PosetCoverCalculator::alpha(int target, int m) const {
  if (m == 0) return 1;
  if (target < 0) return binomial(-target, m);
  long long r = binomial(v_[target], m);
  for (int e = 0; e < p_.n; ++e) {
    if (e == k1_ || v_[e] != m || !p_.leq[e][target]) continue;
    r -= e == target ? 1 : p_.label(e, target);
  }
  return r;
}

long long PosetCoverCalculator::count_in_target(int entry, int target) const {
  if (target >= 0) {
    if (entry >= 0) return entry == target ? 1 : p_.label(entry, target);
    return alpha(target, -entry);
  }
  if (entry >= 0) return 0;  // non-trivial element has edges
  return binomial(-target, -entry);
}

// Sub-targets of `target` paired with their counts in it. With exact_v < 0:
// all proper induced classes (for the cover recursion). With exact_v >= 0:
// all classes on exactly that many vertices, target included.
std::vector<std::pair<int, long long>> PosetCoverCalculator::subtargets(int target,
                                                                        int exact_v) const {
  std::vector<std::pair<int, long long>> out;
  const int tv = target >= 0 ? v_[target] : -target;
  if (target >= 0) {
    for (int e = 0; e < p_.n; ++e) {
      if (e == k1_ || !p_.leq[e][target]) continue;
      if (exact_v >= 0) {
        if (v_[e] != exact_v) continue;
      } else if (e == target) {
        continue;
      }
      out.push_back({e, e == target ? 1 : p_.label(e, target)});
    }
  }
  const int lo = exact_v >= 0 ? exact_v : 1;
  const int hi = exact_v >= 0 ? std::min(exact_v, tv) : tv - 1;
  for (int s = lo; s <= hi; ++s) {
    if (s < 1) continue;
    long long a = target >= 0 ? alpha(target, s) : binomial(tv, s);
    if (a > 0) out.push_back({-s, a});
  }
  return out;
}

long long PosetCoverCalculator::vcov(std::vector<int> entries, int target) {
  std::sort(entries.begin(), entries.end());
  auto key = std::make_pair(entries, target);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  int tv = target >= 0 ? v_[target] : -target;
  long long result = 0;
  int cap = 0;
  for (int e : entries) cap += entry_vertices(e);
  if (cap >= tv) {
    long long prod = 1;
    for (int e : entries) {
      prod = checked_mul(prod, count_in_target(e, target));
      if (prod == 0) break;
    }
    if (prod != 0) {
      result = prod;
      for (auto [t2, weight] : subtargets(target, -1)) {
        long long inner = vcov(entries, t2);
        if (inner) result = checked_add(result, -checked_mul(inner, weight));
      }
      if (result < 0) fail("inconsistent-labels", "negative cover count from poset labels");
    }
  }
  memo_[key] = result;
  return result;
}

long long PosetCoverCalculator::pisub(const std::vector<int>& component_entries, int target) {
  int va = 0;
  for (int e : component_entries) va += entry_vertices(e);
  if (va == 0) return 1;
  int tv = target >= 0 ? v_[target] : -target;
  if (va > tv) return 0;
  long long denom = 1;
  {
    std::vector<int> sorted(component_entries);
    std::sort(sorted.begin(), sorted.end());
    long long run = 1;
    for (size_t i = 1; i <= sorted.size(); ++i) {
      if (i < sorted.size() && sorted[i] == sorted[i - 1]) {
        ++run;
      } else {
        denom = checked_mul(denom, factorial(static_cast<int>(run)));
        run = 1;
      }
    }
  }
  long long total = 0;
  // spanning covers of every induced class on va vertices, weighted by the
  // class count in the target; sizes summing to v force disjointness
  for (auto [h, weight] : subtargets(target, va)) {
    long long ordered = vcov(component_entries, h);
    if (!ordered) continue;
    if (ordered % denom != 0) fail("inconsistent-labels", "non-exact unordered division");
    total = checked_add(total, checked_mul(ordered / denom, weight));
  }
  return total;
}

long long vcov_from_poset(const std::vector<Graph>& S, const LabeledPoset& p) {
  PosetCoverCalculator calc(p);
  std::vector<int> entries;
  for (const Graph& f : S) {
    auto e = calc.resolve(f);
    if (!e) return 0;  // not an induced class of the underlying graph
    entries.push_back(*e);
  }
  return calc.vcov(entries, calc.top());
}

long long pisub_from_poset(const Graph& a, const LabeledPoset& p) {
  PosetCoverCalculator calc(p);
  std::vector<int> entries;
  for (const Graph& c : components(a)) {
    auto e = calc.resolve(c);
    if (!e) return 0;
    entries.push_back(*e);
  }
  return calc.pisub(entries, calc.top());
}

}  // namespace posetlab
