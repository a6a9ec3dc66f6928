#pragma once

#include "posetlab/symfn.hpp"

namespace posetlab {

// Counts of ordered vertex partitions of a tree by class sizes and internal
// edge counts: key is (q vector, k vector) of equal length.
using BadEdgeTable = std::map<std::pair<std::vector<int>, std::vector<int>>, long long>;

bool recognize_tree_from_symfun(const MonomialSymFn& x);
bool recognize_tree_from_deck(const PartitionDeck& d);

// Solve the refinement system for the connected-partition counts of a tree.
PartitionDeck deck_from_symfun(const MonomialSymFn& x);

// Alternating power-sum expansion of a tree deck, in monomial form.
MonomialSymFn symfun_from_deck(const PartitionDeck& d);

// f(q,k) for every positive composition k of v(T) with r parts and every
// 0 <= q <= k-1, by the top-down false-positive elimination recursion.
BadEdgeTable bad_edge_table(const PartitionDeck& d, int r);

TutteSymFn xgt_from_symfun_tree(const MonomialSymFn& x);

// (subtree size, boundary degree) -> count; the size-1 slice is the degree
// sequence.
std::map<std::pair<int, int>, long long> subtree_degree_counts(const MonomialSymFn& x);

std::vector<int> degree_sequence_from_symfun(const MonomialSymFn& x);  // non-increasing

}  // namespace posetlab
