#pragma once

#include <cstdint>
#include <vector>

#include "coloring.hpp"
#include "graph.hpp"
#include "report.hpp"

namespace critic {

// Proper max-degree colorings of g with exactly the given edge uncolored.
// The first sample is the exact solver's witness; each later sample applies a
// burst of seeded random Kempe switches to the previous one, so the whole
// sequence is a function of (g, eid, seed).  Returns an empty vector when no
// such coloring exists or the solver budget runs out.
std::vector<EdgeColoring> sample_delta_colorings(const Graph& g, int eid, std::size_t count,
                                                 uint64_t seed, long long chi_budget);

// Aggregated elementarity sweep: for every edge of g, samples colorings of
// g minus that edge and checks every maximal alternating path and broom in
// each sample.  Returns three reports (kierstead_elementary, kierstead_p4,
// broom_elementary) with per-slug counts; a verdict of VIOLATED carries the
// first violating structure as its witness.
std::vector<LemmaReport> sampled_structure_checks(const Graph& g, std::size_t samples_per_edge,
                                                  uint64_t seed, long long chi_budget);

}  // namespace critic
