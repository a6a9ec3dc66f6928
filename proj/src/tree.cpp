#include "posetlab/tree.hpp"

#include <algorithm>

namespace posetlab {

namespace {

IntPartition all_ones(int d) { return IntPartition(d, 1); }

int degree_of(const MonomialSymFn& x) {
  if (x.coeffs.empty()) fail("invalid-input", "empty symmetric function");
  return x.degree;
}

long long edge_count_from_symfun(const MonomialSymFn& x, int d) {
  if (d == 1) return 0;
  IntPartition key(d - 1, 1);
  key[0] = 2;
  long long c = x.coeff(key);
  long long denom = factorial(d - 2);
  if (c % denom != 0) fail("invalid-input", "not a chromatic symmetric function");
  return binomial(d, 2) - c / denom;
}

}  // namespace

bool recognize_tree_from_symfun(const MonomialSymFn& x) {
  int d = degree_of(x);
  if (x.coeff(all_ones(d)) != factorial(d)) fail("invalid-input", "missing all-ones term");
  if (d == 1) return true;
  long long m = edge_count_from_symfun(x, d);
  if (m != d - 1) return false;
  IntPolynomial p = chromatic_polynomial(x);
  long long acyclic = p.eval(-1);
  if (acyclic < 0) acyclic = -acyclic;
  return acyclic == (1LL << (d - 1));
}

bool recognize_tree_from_deck(const PartitionDeck& d) {
  auto ones = std::find_if(d.begin(), d.end(), [](const auto& kv) {
    return std::all_of(kv.first.begin(), kv.first.end(), [](int p) { return p == 1; });
  });
  if (ones == d.end()) fail("invalid-input", "deck lacks the all-ones partition");
  int v = static_cast<int>(ones->first.size());
  long long e = 0;
  if (v >= 2) {
    IntPartition key(v - 1, 1);
    key[0] = 2;
    auto it = d.find(key);
    e = it == d.end() ? 0 : it->second;
  }
  size_t min_len = v;
  for (const auto& [lambda, k] : d) min_len = std::min(min_len, lambda.size());
  return e == v - 1 && min_len == 1;
}

PartitionDeck deck_from_symfun(const MonomialSymFn& x) {
  if (!recognize_tree_from_symfun(x)) fail("not-a-tree", "symmetric function is not a tree's");
  const int v = degree_of(x);
  // c_lambda = sum over refinements lambda' of
  //   (-1)^(v - len(lambda')) k_{lambda'} a(lambda', lambda),
  // solved upward from the finest partition
  std::vector<IntPartition> lambdas = partitions_of(v);
  std::sort(lambdas.begin(), lambdas.end(),
            [](const IntPartition& a, const IntPartition& b) { return a.size() > b.size(); });
  PartitionDeck deck;
  for (const IntPartition& lambda : lambdas) {
    long long rest = 0;
    for (const auto& [lp, k] : deck) {
      long long a = power_monomial_coefficient(lp, lambda);
      if (!a) continue;
      long long sgn = ((v - static_cast<int>(lp.size())) % 2 == 0) ? 1 : -1;
      rest = checked_add(rest, checked_mul(sgn, checked_mul(k, a)));
    }
    long long self = power_monomial_coefficient(lambda, lambda);
    long long sgn = ((v - static_cast<int>(lambda.size())) % 2 == 0) ? 1 : -1;
    long long num = x.coeff(lambda) - rest;
    if (num % (sgn * self) != 0) fail("not-a-tree", "deck system has no integer solution");
    long long k = num / (sgn * self);
    if (k < 0) fail("not-a-tree", "deck system has a negative solution");
    if (k) deck[lambda] = k;
  }
  return deck;
}

MonomialSymFn symfun_from_deck(const PartitionDeck& d) {
  auto ones = std::find_if(d.begin(), d.end(), [](const auto& kv) {
    return std::all_of(kv.first.begin(), kv.first.end(), [](int p) { return p == 1; });
  });
  if (ones == d.end()) fail("invalid-input", "deck lacks the all-ones partition");
  int v = static_cast<int>(ones->first.size());
  PowerSumExpansion e;
  e.degree = v;
  for (const auto& [lambda, k] : d) {
    long long sgn = ((v - static_cast<int>(lambda.size())) % 2 == 0) ? 1 : -1;
    e.coeffs[lambda] = checked_mul(sgn, k);
  }
  MonomialSymFn x = power_to_monomial(e);
  for (auto it = x.coeffs.begin(); it != x.coeffs.end();) {
    if (it->second == 0)
      it = x.coeffs.erase(it);
    else
      ++it;
  }
  return x;
}

namespace {

// Ordered set partitions (A_1..A_r) of the part instances of lambda with
// per-class sums k_i and per-class counts k_i - p_i.
long long count_groupings(const std::vector<int>& p, const std::vector<int>& k,
                          const IntPartition& lambda) {
  const int r = static_cast<int>(k.size());
  std::vector<int> need_sum(k), need_cnt(r);
  for (int i = 0; i < r; ++i) {
    need_cnt[i] = k[i] - p[i];
    if (need_cnt[i] <= 0) return 0;
  }
  long long total = 0;
  auto rec = [&](auto&& self, size_t inst) -> void {
    if (inst == lambda.size()) {
      for (int i = 0; i < r; ++i)
        if (need_sum[i] != 0 || need_cnt[i] != 0) return;
      ++total;
      return;
    }
    for (int i = 0; i < r; ++i) {
      if (need_sum[i] < lambda[inst] || need_cnt[i] < 1) continue;
      need_sum[i] -= lambda[inst];
      --need_cnt[i];
      self(self, inst + 1);
      need_sum[i] += lambda[inst];
      ++need_cnt[i];
    }
  };
  rec(rec, 0);
  return total;
}

void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    if (total >= 1) {
      cur.push_back(total);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (int first = 1; first <= total - parts + 1; ++first) {
    cur.push_back(first);
    compositions(total - first, parts - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

BadEdgeTable bad_edge_table(const PartitionDeck& d, int r) {
  if (r < 1) fail("invalid-input", "need at least one class");
  if (!recognize_tree_from_deck(d)) fail("not-a-tree", "deck is not a tree's");
  int v = 0;
  for (const auto& [lambda, k] : d) v = std::max(v, partition_weight(lambda));
  BadEdgeTable table;
  std::vector<std::vector<int>> ks;
  std::vector<int> cur;
  compositions(v, r, cur, ks);
  for (const std::vector<int>& k : ks) {
    // enumerate 0 <= q <= k-1 in descending total order
    std::vector<std::vector<int>> qs;
    std::vector<int> q(r, 0);
    auto gen = [&](auto&& self, int i) -> void {
      if (i == r) {
        qs.push_back(q);
        return;
      }
      for (int x = 0; x <= k[i] - 1; ++x) {
        q[i] = x;
        self(self, i + 1);
      }
    };
    gen(gen, 0);
    std::sort(qs.begin(), qs.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
      int sa = 0, sb = 0;
      for (int x : a) sa += x;
      for (int x : b) sb += x;
      return sa > sb;
    });
    for (const std::vector<int>& p : qs) {
      long long f = 0;
      for (const auto& [lambda, mult] : d)
        f = checked_add(f, checked_mul(count_groupings(p, k, lambda), mult));
      // subtract false positives from strictly dominating vectors
      for (const std::vector<int>& q2 : qs) {
        bool dominates = true, strict = false;
        for (int i = 0; i < r; ++i) {
          if (q2[i] < p[i]) dominates = false;
          if (q2[i] > p[i]) strict = true;
        }
        if (!dominates || !strict) continue;
        auto it = table.find({q2, k});
        if (it == table.end() || it->second == 0) continue;
        long long prod = it->second;
        for (int i = 0; i < r; ++i) prod = checked_mul(prod, binomial(q2[i], p[i]));
        f = checked_add(f, -prod);
      }
      if (f < 0) fail("inconsistent-labels", "negative ordered-partition count");
      if (f) table[{p, k}] = f;
    }
  }
  return table;
}

TutteSymFn xgt_from_symfun_tree(const MonomialSymFn& x) {
  PartitionDeck deck = deck_from_symfun(x);
  const int v = degree_of(x);
  TutteSymFn out;
  out.degree = v;
  std::map<int, BadEdgeTable> tables;
  for (const IntPartition& lambda : partitions_of(v)) {
    const int r = static_cast<int>(lambda.size());
    auto tit = tables.find(r);
    if (tit == tables.end()) tit = tables.emplace(r, bad_edge_table(deck, r)).first;
    const BadEdgeTable& table = tit->second;
    std::vector<int> k(lambda.begin(), lambda.end());
    for (const auto& [key, f] : table) {
      if (key.second != k) continue;
      int j = 0;
      for (int q : key.first) j += q;
      auto out_key = std::make_pair(lambda, j);
      auto it = out.coeffs.find(out_key);
      out.coeffs[out_key] = it == out.coeffs.end() ? f : checked_add(it->second, f);
    }
  }
  return out;
}

std::map<std::pair<int, int>, long long> subtree_degree_counts(const MonomialSymFn& x) {
  PartitionDeck deck = deck_from_symfun(x);
  const int v = degree_of(x);
  std::map<std::pair<int, int>, long long> out;
  if (v == 1) {
    out[{1, 0}] = 1;
    return out;
  }
  BadEdgeTable t2 = bad_edge_table(deck, 2);
  for (int k = 1; k < v; ++k)
    for (int deg = 0; deg <= v - k; ++deg) {
      int q2 = v - k - deg;
      auto it = t2.find({{k - 1, q2}, {k, v - k}});
      if (it != t2.end() && it->second) out[{k, deg}] = it->second;
    }
  out[{v, 0}] = 1;  // the whole tree
  return out;
}

std::vector<int> degree_sequence_from_symfun(const MonomialSymFn& x) {
  auto counts = subtree_degree_counts(x);
  std::vector<int> seq;
  for (const auto& [key, c] : counts) {
    if (key.first != 1) continue;
    for (long long i = 0; i < c; ++i) seq.push_back(key.second);
  }
  std::sort(seq.begin(), seq.end(), std::greater<int>());
  return seq;
}

}  // namespace posetlab
