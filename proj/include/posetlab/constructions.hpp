#pragma once

#include <variant>

#include "posetlab/lattice.hpp"

namespace posetlab {

// Build the partially labelled folded connected partition lattice from the
// abstract induced subgraph poset.
FoldedLattice lattice_from_poset(const LabeledPoset& p);

// Build the induced subgraph poset (name-typed, abstract) from a partially
// labelled folded lattice.
LabeledPoset poset_from_typed_lattice(const FoldedLattice& l);

// Same, starting from a lattice labelled only by partition types.
LabeledPoset poset_from_lambda_lattice(const FoldedLattice& l);

// The underlying graph, returned directly when the abstract lattice pins it
// down even though its elements cannot all be named.
struct SpecialAnswer {
  Graph graph;
};
using AbstractLatticeResult = std::variant<LabeledPoset, SpecialAnswer>;

// Recover the poset from a fully abstract lattice. Errors:
// "ambiguous-star-matching" on chains, "unrecognized-anchor" when no anchor
// or special form matches.
AbstractLatticeResult poset_from_abstract_lattice(const FoldedLattice& l);

// Reference lattices used by the abstract construction: anchors first, then
// the specially handled graphs. All pairwise non-isomorphic.
const std::vector<std::pair<std::string, Graph>>& anchor_graphs();
const std::vector<std::pair<std::string, Graph>>& special_graphs();

}  // namespace posetlab
