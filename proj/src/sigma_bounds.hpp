#pragma once

#include "graph.hpp"
#include "rational.hpp"
#include "report.hpp"

namespace critic {

enum class BoundMode { FanBound, BroomBound };

// Existence bounds on sigma_q sums around low-degree edges.
//
// FanBound: for each edge xy with d(x) < Delta/2 (both orientations), some
// z in N(x)\{y} gives
//   sigma_q(x,y) + sigma_q(x,z) > 2D - d(x) - (6d(x)-8)/(D-q) - 8(d(x)-2)/(D-q)^2.
//
// BroomBound: needs min degree >= Delta/2; for each edge x1x2 with
// d(x1)+d(x2) < 3*Delta/2 (both orientations), some pair z in N(x1)\{x2},
// y in N(x2)\{x1,z} gives
//   sigma_q(x1,z) + sigma_q(x2,y) >
//     3D - d(x1) - d(x2) - (6(d(x1)+d(x2)-D)-4)/(D-q) - 8(d(x1)+d(x2)-D-2)/(D-q)^2.
//
// Both need 0 < q <= Delta - 10.  The witness search is exhaustive; bounds are
// exact rationals.  No criticality certificate is consulted: the caller
// decides what population to run this on.
LemmaReport check_sigma_bounds(const Graph& g, const Rational& q, BoundMode mode);

}  // namespace critic
