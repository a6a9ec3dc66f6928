#pragma once

#include <string>

#include "posetlab/graph.hpp"

namespace posetlab {

// graph6: printable encoding, 6 bits per character offset by 63; n header
// followed by the upper triangle x(0,1) x(0,2) x(1,2) x(0,3) ... column-major.
Graph parse_graph6(const std::string& s);
std::string write_graph6(const Graph& g);

}  // namespace posetlab
