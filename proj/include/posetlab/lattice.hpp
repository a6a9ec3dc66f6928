#pragma once

#include "posetlab/poset.hpp"

namespace posetlab {

// Map from cell-size partition to the number of connected partitions of that
// type.
using PartitionDeck = std::map<IntPartition, long long>;

enum class LatticeLabeling { Full, Partial, Abstract };

// Folded connected partition lattice: one element per isomorphism class of
// spanning subgraph induced by a connected partition, ordered by spanning
// coarsening, labelled with the number of connected partitions of the coarser
// element's graph inducing the finer one.
struct FoldedLattice {
  int n = 0;
  std::vector<std::optional<Graph>> reps;            // full labelling
  std::vector<std::optional<CanonicalCode>> codes;
  std::vector<std::optional<NameMultiset>> types;    // partial labelling
  std::vector<int> name_sizes;                       // v(H_name); index 0 is the vertex
  std::vector<std::optional<IntPartition>> lambdas;  // partition types
  std::vector<std::vector<char>> leq;
  std::map<std::pair<int, int>, long long> labels;
  std::vector<int> ranks;  // v(G) - c(element); 0 at the bottom

  long long label(int i, int j) const {
    auto it = labels.find({i, j});
    return it == labels.end() ? 0 : it->second;
  }
  bool related(int i, int j) const { return leq[i][j]; }
  int bottom() const;
  int top() const;
  LatticeLabeling labeling() const;
  // rank recomputed from the order alone (longest chain from the bottom);
  // used to validate abstract inputs
  std::vector<int> height_ranks() const;
};

FoldedLattice build_folded_lattice(const Graph& g);

PartitionDeck partition_deck(const Graph& g);

// mu(bottom, element) for every element, solved in rank order from the
// vanishing-sum recursion over the labels.
std::vector<long long> mobius_table(const FoldedLattice& l);

// Weaken the labelling. Strengthening fails with "labeling-strength".
FoldedLattice relabel(const FoldedLattice& l, LatticeLabeling mode);

// Order + numeric labels only.
std::string lattice_canonical_key(const FoldedLattice& l);

LabeledPoset lattice_as_poset(const FoldedLattice& l);

// Label-preserving order isomorphism respecting partial types up to a
// renaming of the component names.
bool typed_lattice_isomorphic(const FoldedLattice& a, const FoldedLattice& b);

}  // namespace posetlab
