#include "posetlab/symfn.hpp"

#include <algorithm>

namespace posetlab {

namespace {

// All partitions of V(g) with every cell independent / arbitrary, as cell
// masks via restricted growth; callback per partition.
template <class F>
void for_each_partition(int n, F&& visit) {
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

bool cell_independent(const Graph& g, uint32_t cell) {
  uint32_t m = cell;
  while (m) {
    int v = __builtin_ctz(m);
    m &= m - 1;
    if (g.neighbors(v) & cell) return false;
  }
  return true;
}

int cell_internal_edges(const Graph& g, uint32_t cell) {
  int e = 0;
  uint32_t m = cell;
  while (m) {
    int v = __builtin_ctz(m);
    m &= m - 1;
    e += __builtin_popcount(g.neighbors(v) & cell & ((1u << v) - 1));
  }
  return e;
}

IntPartition cells_type(const std::vector<uint32_t>& cells) {
  IntPartition t;
  for (uint32_t c : cells) t.push_back(__builtin_popcount(c));
  std::sort(t.begin(), t.end(), std::greater<int>());
  return t;
}

// orderings of the cells into colour positions with prescribed sizes
long long orderings_of_type(const IntPartition& t) {
  long long r = 1;
  for (int m : part_multiplicities(t)) r = checked_mul(r, factorial(m));
  return r;
}

}  // namespace

MonomialSymFn xg_direct(const Graph& g) {
  if (g.vertex_count() < 1) fail("invalid-input", "chromatic symmetric function needs vertices");
  MonomialSymFn x;
  x.degree = g.vertex_count();
  for_each_partition(g.vertex_count(), [&](const std::vector<uint32_t>& cells) {
    for (uint32_t c : cells)
      if (!cell_independent(g, c)) return;
    IntPartition t = cells_type(cells);
    x.coeffs[t] = checked_add(x.coeff(t), orderings_of_type(t));
  });
  return x;
}

TutteSymFn xgt_direct(const Graph& g) {
  if (g.vertex_count() < 1) fail("invalid-input", "symmetric Tutte polynomial needs vertices");
  TutteSymFn x;
  x.degree = g.vertex_count();
  for_each_partition(g.vertex_count(), [&](const std::vector<uint32_t>& cells) {
    int bad = 0;
    for (uint32_t c : cells) bad += cell_internal_edges(g, c);
    IntPartition t = cells_type(cells);
    auto key = std::make_pair(t, bad);
    auto it = x.coeffs.find(key);
    long long add = orderings_of_type(t);
    x.coeffs[key] = it == x.coeffs.end() ? add : checked_add(it->second, add);
  });
  return x;
}

MonomialSymFn xg_from_poset(const LabeledPoset& p) {
  PosetCoverCalculator calc(p);
  int d = 0;
  for (int v : element_vertex_counts(p)) d = std::max(d, v);
  MonomialSymFn x;
  x.degree = d;
  for (const IntPartition& lambda : partitions_of(d)) {
    std::vector<int> entries;
    for (int part : lambda) entries.push_back(-part);
    long long c = calc.vcov(entries, calc.top());
    if (c) x.coeffs[lambda] = c;
  }
  return x;
}

TutteSymFn xgt_from_poset(const LabeledPoset& p) {
  PosetCoverCalculator calc(p);
  const std::vector<int> v = element_vertex_counts(p);
  int d = 0;
  for (int x : v) d = std::max(d, x);
  int k1 = p.unique_minimal();
  // edge counts read off the labels against the two-vertex class
  int k2 = -1;
  for (int i = 0; i < p.n; ++i)
    if (i != k1 && v[i] == 2) k2 = i;
  if (k2 < 0) fail("malformed-poset", "poset lacks the one-edge class");
  auto edge_count_of = [&](int entry) -> long long {
    if (entry < 0) return 0;
    if (entry == k2) return 1;
    return p.label(k2, entry);
  };
  // entries available per size: elements plus the edgeless class
  std::vector<std::vector<int>> by_size(d + 1);
  for (int i = 0; i < p.n; ++i)
    if (i != k1 && v[i] <= d) by_size[v[i]].push_back(i);
  for (int s = 1; s <= d; ++s) by_size[s].push_back(-s);

  TutteSymFn x;
  x.degree = d;
  for (const IntPartition& lambda : partitions_of(d)) {
    // ordered tuples with the exact non-increasing size sequence of lambda
    std::vector<int> tuple(lambda.size());
    auto rec = [&](auto&& self, size_t i) -> void {
      if (i == lambda.size()) {
        long long c = calc.vcov(std::vector<int>(tuple), calc.top());
        if (!c) return;
        long long j = 0;
        for (int e : tuple) j = checked_add(j, edge_count_of(e));
        auto key = std::make_pair(lambda, static_cast<int>(j));
        auto it = x.coeffs.find(key);
        x.coeffs[key] = it == x.coeffs.end() ? c : checked_add(it->second, c);
        return;
      }
      for (int e : by_size[lambda[i]]) {
        tuple[i] = e;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
  }
  return x;
}

long long power_monomial_coefficient(const IntPartition& lambda_prime, const IntPartition& lambda) {
  // assign each part instance of lambda' to a slot of lambda with exact sums
  std::vector<int> rem(lambda.begin(), lambda.end());
  long long total = 0;
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == lambda_prime.size()) {
      ++total;
      return;
    }
    for (size_t s = 0; s < rem.size(); ++s) {
      if (rem[s] < lambda_prime[i]) continue;
      rem[s] -= lambda_prime[i];
      self(self, i + 1);
      rem[s] += lambda_prime[i];
    }
  };
  if (partition_weight(lambda_prime) != partition_weight(lambda)) return 0;
  rec(rec, 0);
  return total;
}

MonomialSymFn power_to_monomial(const PowerSumExpansion& e) {
  MonomialSymFn x;
  x.degree = e.degree;
  for (const IntPartition& lambda : partitions_of(e.degree)) {
    long long c = 0;
    for (const auto& [lp, coeff] : e.coeffs)
      c = checked_add(c, checked_mul(coeff, power_monomial_coefficient(lp, lambda)));
    if (c) x.coeffs[lambda] = c;
  }
  return x;
}

MonomialSymFn xg_from_lattice(const FoldedLattice& l, const std::vector<long long>& mobius) {
  PowerSumExpansion e;
  int top = l.top();
  for (int i = 0; i < l.n; ++i)
    if (!l.lambdas[i]) fail("invalid-input", "lattice lacks partition types");
  e.degree = partition_weight(*l.lambdas[l.bottom()]);
  for (int i = 0; i < l.n; ++i) {
    long long mult = i == top ? 1 : l.label(i, top);
    if (!l.related(i, top) && i != top) continue;
    long long c = checked_mul(mult, mobius[i]);
    const IntPartition& lam = *l.lambdas[i];
    auto it = e.coeffs.find(lam);
    e.coeffs[lam] = it == e.coeffs.end() ? c : checked_add(it->second, c);
  }
  MonomialSymFn x = power_to_monomial(e);
  for (auto it = x.coeffs.begin(); it != x.coeffs.end();) {
    if (it->second == 0)
      it = x.coeffs.erase(it);
    else
      ++it;
  }
  for (const auto& [lam, c] : x.coeffs)
    if (c < 0) fail("inconsistent-labels", "negative coefficient in lattice expansion");
  return x;
}

IntPolynomial chromatic_polynomial(const MonomialSymFn& x) {
  // P(k) = sum over lambda of N_lambda * k(k-1)...(k-l+1), where N_lambda is
  // the number of unordered independent partitions of that type
  IntPolynomial p;
  p.c.assign(x.degree + 1, 0);
  for (const auto& [lambda, c] : x.coeffs) {
    long long orderings = orderings_of_type(lambda);
    if (c % orderings != 0) fail("invalid-input", "not a chromatic symmetric function");
    long long n_lambda = c / orderings;
    std::vector<long long> falling{1};  // falling factorial polynomial
    for (size_t i = 0; i < lambda.size(); ++i) {
      std::vector<long long> next(falling.size() + 1, 0);
      for (size_t k = 0; k < falling.size(); ++k) {
        next[k + 1] = checked_add(next[k + 1], falling[k]);
        next[k] = checked_add(next[k], checked_mul(falling[k], -static_cast<long long>(i)));
      }
      falling = std::move(next);
    }
    for (size_t k = 0; k < falling.size(); ++k)
      p.c[k] = checked_add(p.c[k], checked_mul(n_lambda, falling[k]));
  }
  return p;
}

MonomialSymFn tutte_chromatic_slice(const TutteSymFn& t) {
  MonomialSymFn x;
  x.degree = t.degree;
  for (const auto& [key, c] : t.coeffs)
    if (key.second == 0) x.coeffs[key.first] = c;
  return x;
}

}  // namespace posetlab
