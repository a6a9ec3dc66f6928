#pragma once

#include "posetlab/poset.hpp"

namespace posetlab {

// Number of ordered tuples (X_1..X_k) of vertex subsets of h with
// h[X_i] isomorphic to S[i] and union V(h), by direct enumeration.
long long vcov_direct(const std::vector<Graph>& S, const Graph& h);

// Cover and pi-subgraph counts computed from an induced subgraph poset alone
// (codes are only used to resolve input graphs to element ids; the recursion
// reads nothing but the order and the labels).
//
// Tuple entries and targets: id >= 0 is a poset element with edges; id == -k
// (k >= 1) is the edgeless graph on k vertices. The one-vertex element is
// normalized to -1.
class PosetCoverCalculator {
 public:
  explicit PosetCoverCalculator(const LabeledPoset& p);

  long long vcov(std::vector<int> entries, int target);
  // components of A given as entries (connected elements or -1); counts
  // pi-subgraphs of the target element isomorphic to their disjoint union
  long long pisub(const std::vector<int>& component_entries, int target);
  long long alpha(int target, int m) const;  // edgeless m-subset count
  int entry_vertices(int e) const { return e >= 0 ? v_[e] : -e; }
  int top() const { return top_; }
  const LabeledPoset& poset() const { return p_; }
  // resolve a graph to an entry; nullopt when it is not represented
  std::optional<int> resolve(const Graph& f) const;

 private:
  long long count_in_target(int entry, int target) const;
  std::vector<std::pair<int, long long>> subtargets(int target, int exact_v) const;

  const LabeledPoset& p_;
  std::vector<int> v_;
  int k1_ = -1;
  int top_ = -1;
  std::map<std::pair<std::vector<int>, int>, long long> memo_;
};

long long vcov_from_poset(const std::vector<Graph>& S, const LabeledPoset& p);
long long pisub_from_poset(const Graph& a, const LabeledPoset& p);

}  // namespace posetlab
