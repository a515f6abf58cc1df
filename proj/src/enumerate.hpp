#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "graph.hpp"

namespace critic {

// Canonical form: lexicographically least packed upper-triangle adjacency
// bitstring over the labelings explored by iterative degree refinement with
// backtracking on the first non-singleton cell.  Equal codes <=> isomorphic.
std::vector<uint64_t> canonical_code(const Graph& g);

// Labeling realizing the canonical code: position i holds the original vertex
// placed at canonical index i.
std::vector<int> canonical_labeling(const Graph& g);

Graph canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

// All graphs on n vertices up to isomorphism, yielded in increasing canonical
// code order.  Grows representatives one vertex at a time and dedups by
// canonical form.  Hard cap n <= 8.
void enumerate_all(int n, const std::function<void(const Graph&)>& yield);
std::vector<Graph> enumerate_all(int n);

}  // namespace critic
