#pragma once

#include <compare>
#include <string>

#include "posetlab/graph.hpp"

namespace posetlab {

// Isomorphism certificate: equal bytes iff the graphs are isomorphic.
struct CanonicalCode {
  std::string bytes;
  auto operator<=>(const CanonicalCode&) const = default;
};

CanonicalCode canonical_code(const Graph& g);

// Canonically relabeled representative (its code equals canonical_code(g)).
Graph canonical_form(const Graph& g);

// Rebuild the representative graph from a certificate.
Graph graph_from_code(const CanonicalCode& code);

bool is_isomorphic(const Graph& a, const Graph& b);

// Connected components as canonical representatives, sorted by (v, code).
std::vector<Graph> components(const Graph& g);

enum class DeckKind { Vertex, Edge };

// Vertex deck: codes of g-u. Edge deck: codes of g-e with isolated vertices
// dropped. Sorted multiset.
std::vector<CanonicalCode> deck(const Graph& g, DeckKind kind);

// Sort key (v, e, code) used for all canonical graph orderings.
std::string graph_order_key(const Graph& g);

}  // namespace posetlab
