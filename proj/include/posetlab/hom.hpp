#pragma once

#include <optional>

#include "posetlab/enumerate.hpp"

namespace posetlab {

// Number of adjacency-preserving maps V(g) -> V(h).
long long count_hom(const Graph& g, const Graph& h);

enum class MonoMethod { Direct, Inversion };

// Injective homomorphism count, either direct or via Moebius inversion over
// the partition lattice of V(g) applied to quotient homomorphism counts.
long long count_mono(const Graph& g, const Graph& h, MonoMethod method = MonoMethod::Direct);

enum class WitnessDirection { Left, Right };

// Smallest H (canonical order, at most max_n vertices) with differing
// hom(g1 -> H) vs hom(g2 -> H) (Left) or hom(H -> g_i) (Right).
std::optional<Graph> distinguishing_witness(const Graph& g1, const Graph& g2,
                                            WitnessDirection dir, int max_n);

struct ConjectureScanReport {
  int max_vertices = 0;
  int universe_size = 0;
  long long checked_bijections = 0;
  std::vector<std::vector<int>> surviving_non_identity;  // image vectors
  std::string disclaimer;
};

// Enumerate bijections of the class universe (all graphs on at most n
// vertices, null graph included) compatible with every pairwise hom count.
ConjectureScanReport conjecture_scan(int n);

}  // namespace posetlab
