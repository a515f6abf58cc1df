#pragma once

#include "coloring.hpp"
#include "graph.hpp"

namespace critic {

// Constructive fan-rotation coloring: always proper, always within palette
// {1..max_degree+1}.  Deterministic (ascending neighbor and color scans).
EdgeColoring vizing_color(const Graph& g);

}  // namespace critic
