#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace posetlab {

// Domain error with a stable machine-readable code (kebab-case).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
  throw Error(code, message);
}

inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) fail("overflow", "integer overflow in addition");
  return r;
}

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) fail("overflow", "integer overflow in multiplication");
  return r;
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
  return r;
}

inline long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r = checked_mul(r, i);
  return r;
}

// Integer partition: non-increasing list of positive parts.
using IntPartition = std::vector<int>;

inline IntPartition make_partition(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  for (int p : parts)
    if (p <= 0) fail("invalid-input", "partition parts must be positive");
  return parts;
}

inline int partition_weight(const IntPartition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

// All partitions of n, largest-part-first lexicographic order.
inline std::vector<IntPartition> partitions_of(int n) {
  std::vector<IntPartition> out;
  IntPartition cur;
  auto rec = [&](auto&& self, int rem, int maxPart) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rem, maxPart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

// Multiplicities of the distinct part values.
inline std::vector<int> part_multiplicities(const IntPartition& p) {
  std::vector<int> mult;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i > 0 && p[i] == p[i - 1])
      ++mult.back();
    else
      mult.push_back(1);
  }
  return mult;
}

// Thread-safe insert-if-absent memo map. Values are immutable once stored and
// never erased; std::map nodes are stable, so returned references stay valid.
template <class K, class V>
class ConcurrentMemo {
 public:
  const V* find(const K& k) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(k);
    return it == map_.end() ? nullptr : &it->second;
  }
  template <class F>
  const V& get_or_compute(const K& k, F&& compute) {
    if (const V* hit = find(k)) return *hit;
    V v = compute();
    std::unique_lock lock(mu_);
    auto [it, inserted] = map_.emplace(k, std::move(v));
    return it->second;
  }

 private:
  mutable std::shared_mutex mu_;
  std::map<K, V> map_;
};

}  // namespace posetlab
