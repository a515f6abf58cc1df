#pragma once

#include <cstdint>
#include <vector>

#include "coloring.hpp"
#include "graph.hpp"
#include "report.hpp"

namespace critic {

enum class FeasMode { Single, Pair };

// All derived data of a pivot-feasible coloring of g minus one edge.
//
// Single mode: the uncolored edge is xy and the pivot edge xz carries a color
// missing at y.  Pair mode: the uncolored edge is x1x2 (stored as x, y), the
// pivot edges x1z and x2y' carry colors missing at the opposite endpoint.
//
// The stored coloring is a palette relabeling of the input: the first pivot
// edge is renamed to color 1 and, in pair mode, the second to color 2, so the
// normalized handles R and R' read literally.  Relabeling a proper coloring
// class-by-class keeps it proper and every set size invariant.
struct FeasibleContext {
  FeasMode mode = FeasMode::Single;
  int edge = -1;        // the uncolored edge
  int x = -1, y = -1;   // endpoints of the uncolored edge (pair: x1, x2)
  int z = -1;           // pivot adjacent to x
  int y_pivot = -1;     // pair mode only: pivot adjacent to the second endpoint
  Rational q{0};
  EdgeColoring phi;     // normalized copy

  std::vector<int> Z, Y;              // vertex sets, ascending
  std::vector<int> Cz, Cy, T0;        // color sets, ascending
  std::vector<int> R, Rprime;         // Cz ∪ Cy; pair mode adds colors 1 and 2
  std::vector<int> z_partner, y_partner;  // color -> neighbor across that color (index 0 unused; -1 absent)
};

// Builds the context, validating feasibility.  y_pivot < 0 selects single
// mode.  Throws Err::Feasibility when the coloring does not leave exactly the
// given edge uncolored at the full-degree palette, or when a pivot edge's
// color is not missing where required.
FeasibleContext feasible_context(const Graph& g, int eid, int x, int z, int y_pivot,
                                 const EdgeColoring& c, const Rational& q);

// Single mode only: moves the uncolored slot from xy to xz by coloring xy
// with the old color of xz.  Applying the transform twice restores the
// context's coloring exactly.
EdgeColoring dual_coloring(const Graph& g, const FeasibleContext& ctx);

struct StatementBudget {
  uint64_t target_visits = 1200;  // feasible-configuration visits to collect
  uint64_t max_steps = 120000;    // Kempe-walk step cap
  uint32_t restart_period = 250;  // steps between restarts from the base coloring
  long long chi_budget = 10'000'000;
};

// Checks, for one (edge, q) instance, the universal size bound on Cz and Cy
// over every feasible coloring the seeded Kempe walk visits, and searches for
// one coloring whose T0 meets the existential bound.  The universal part can
// report VIOLATED; the existential part only HOLDS (with a witness coloring)
// or stays INCONCLUSIVE.
LemmaReport verify_coloring_statements(const Graph& g, int eid, const Rational& q,
                                       const StatementBudget& budget, uint64_t seed);

}  // namespace critic
