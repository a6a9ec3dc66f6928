#pragma once

#include <map>
#include <optional>

#include "posetlab/counting.hpp"

namespace posetlab {

// Multiset of component names, sorted (nameId, count) pairs. Name 0 is the
// single vertex.
using NameMultiset = std::vector<std::pair<int, int>>;

// Poset of isomorphism classes with a positive integer label on every related
// pair. Codes/representatives are optional: absent means abstract.
struct LabeledPoset {
  enum class Kind { Induced, Edge, Generic };
  Kind kind = Kind::Generic;
  int n = 0;
  std::vector<std::optional<CanonicalCode>> codes;
  std::vector<std::optional<Graph>> reps;
  std::vector<std::optional<NameMultiset>> types;  // name-typed elements
  std::vector<std::vector<char>> leq;              // reflexive, transitive
  std::map<std::pair<int, int>, long long> labels;

  bool related(int i, int j) const { return leq[i][j]; }
  long long label(int i, int j) const {
    auto it = labels.find({i, j});
    return it == labels.end() ? 0 : it->second;
  }
  bool abstract() const {
    for (const auto& c : codes)
      if (c) return false;
    return true;
  }
  LabeledPoset anonymized() const {
    LabeledPoset p = *this;
    p.codes.assign(n, std::nullopt);
    p.reps.assign(n, std::nullopt);
    return p;
  }
  int unique_minimal() const;  // fails("malformed-poset") if not unique
  int unique_maximal() const;
};

// Induced subgraph poset: K_1 plus one class per induced subgraph with at
// least one edge, ordered by induced containment, labelled by induced counts.
LabeledPoset build_induced_poset(const Graph& g);

// Edge subgraph poset: one class per non-empty edge subgraph, ordered by
// edge-subgraph containment, labelled by edge-subgraph counts.
LabeledPoset build_edge_poset(const Graph& g);

// Label-preserving order isomorphism; lexicographically least image vector
// when one exists.
std::optional<std::vector<int>> poset_isomorphic(const LabeledPoset& a, const LabeledPoset& b);

// All label-preserving self-bijections, identity first.
std::vector<std::vector<int>> poset_automorphisms(const LabeledPoset& p);

// Certificate of the abstract poset: equal keys iff label-isomorphic.
std::string poset_canonical_key(const LabeledPoset& p);

// Vertex count of an element, read off the label against the unique minimal
// element (which must be the one-vertex class).
std::vector<int> element_vertex_counts(const LabeledPoset& p);

// Connectivity of each element's underlying graph, recovered recursively from
// the abstract structure.
std::vector<bool> connected_elements(const LabeledPoset& p);

// Connectivity of the whole underlying graph (the unique maximal element).
bool is_connected_from_poset(const LabeledPoset& p);

}  // namespace posetlab
