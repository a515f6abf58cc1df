#pragma once

#include "coloring.hpp"
#include "graph.hpp"

namespace critic {

inline constexpr long long kDefaultChiBudget = 10'000'000;

struct ExactColoring {
  enum Status { Found, Infeasible, Budget };
  Status status = Infeasible;
  EdgeColoring coloring;  // total proper k-coloring when status == Found
  long long nodes = 0;    // color assignments attempted
};

// Decision search for a proper edge coloring with palette {1..k}.  Edges are
// tried in a fixed static order (decreasing endpoint degree sum, ties by edge
// id) with new color indices introduced in order, so results and node counts
// are reproducible.
ExactColoring solve_edge_coloring(const Graph& g, int k, long long budget);

struct ChromaticIndex {
  enum Status { Exact, Budget };
  Status status = Budget;
  int value = 0;  // max_degree or max_degree+1 when Exact
  bool class_two = false;
  EdgeColoring witness;
  long long nodes = 0;
};

// chi' via the two-value dichotomy: decide k = max_degree exactly; on failure
// the constructive colorer supplies the (max_degree+1)-witness.
ChromaticIndex chromatic_index(const Graph& g, long long budget = kDefaultChiBudget);

}  // namespace critic
