#pragma once

#include "posetlab/canonical.hpp"

namespace posetlab {

// Number of vertex subsets X of V(g) with g[X] isomorphic to f.
long long count_induced(const Graph& f, const Graph& g);

// Number of edge subsets S of E(g) spanning a subgraph isomorphic to f
// (isolated vertices stripped on both sides). Rejects edgeless f.
long long count_edge_sub(const Graph& f, const Graph& g);

// Number of subgraphs of g isomorphic to f whose connected components are
// induced subgraphs of g on disjoint vertex sets.
long long count_pi_sub(const Graph& f, const Graph& g);

// All partitions of V(g) whose cells induce connected subgraphs, in
// deterministic (restricted-growth) order; cells are vertex masks.
std::vector<std::vector<uint32_t>> connected_partitions(const Graph& g);

// Histogram of induced-subgraph codes over all non-empty vertex subsets.
const std::map<CanonicalCode, long long>& induced_histogram(const Graph& g);

// Histogram of edge-subgraph codes over all non-empty edge subsets.
const std::map<CanonicalCode, long long>& edge_histogram(const Graph& g);

// Histogram of spanning-subgraph codes over connected partitions of g.
const std::map<CanonicalCode, long long>& fold_histogram(const Graph& g);

}  // namespace posetlab
