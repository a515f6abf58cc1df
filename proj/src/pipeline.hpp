#pragma once

#include <cstdint>

#include "exact_chromatic.hpp"
#include "graph.hpp"
#include "hamilton.hpp"
#include "report.hpp"

namespace critic {

struct PipelineOptions {
  long long chi_budget = kDefaultChiBudget;
  long long ham_budget = kDefaultHamBudget;
  uint64_t seed = 0;
  int expansion_samples = 200;  // random subsets when the exhaustive cap is exceeded
};

// Staged evaluation of the main theorem on one graph: premise, criticality,
// then the structural facts the proof runs through, ending at Hamiltonicity.
// Every stage reports data unconditionally; verdicts of the later stages are
// gated on the premise and criticality stages.
njson theorem_pipeline(const Graph& g, const PipelineOptions& opts = {});

}  // namespace critic
