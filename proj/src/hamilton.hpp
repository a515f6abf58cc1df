#pragma once

#include <vector>

#include "critical.hpp"
#include "graph.hpp"
#include "report.hpp"

namespace critic {

inline constexpr long long kDefaultHamBudget = 1'000'000;

struct ClosureStep {
  int u = 0, v = 0;
  int degree_sum = 0;  // d(u) + d(v) at the moment the edge was added
};

struct ClosureTrace {
  Graph closure;
  std::vector<ClosureStep> added;
};

// Iterated degree-sum closure: add uv whenever u and v are nonadjacent and
// d(u) + d(v) >= n, until no such pair remains.  The scan order only affects
// the trace, not the final graph; reverse_scan exists to demonstrate that.
ClosureTrace bondy_chvatal_closure(const Graph& g, bool reverse_scan = false);

struct CycleSearch {
  enum Status { Found, None, Budget };
  Status status = Budget;
  std::vector<int> cycle;  // vertex sequence, closed implicitly
  int length = 0;
  long long nodes = 0;
};

// Longest-cycle length (0 for forests).  Exact when status != Budget; a
// Budget result still carries the best cycle discovered so far.
CycleSearch circumference(const Graph& g, long long budget = kDefaultHamBudget);

// Spanning-cycle search.  Found carries the cycle; None is a proof of absence.
CycleSearch hamiltonian_cycle(const Graph& g, long long budget = kDefaultHamBudget);

// Throws unless `cycle` lists distinct vertices of g forming a closed cycle.
void validate_cycle(const Graph& g, const std::vector<int>& cycle);

// Circumference formula for graphs with all edge degree sums >= n (stars
// excluded): n minus the worst independent-set deficiency.
LemmaReport brandt_veldman_check(const Graph& g, long long ham_budget = kDefaultHamBudget);

// The closure preserves circumference, hence Hamiltonicity.
LemmaReport closure_equivalence_check(const Graph& g, long long ham_budget = kDefaultHamBudget);

// Critical graphs whose edge degree sums all reach n have a spanning cycle.
LemmaReport degree_sum_hamiltonicity_check(const Graph& g, const CriticalityReport* cert = nullptr,
                                           long long ham_budget = kDefaultHamBudget);

// Critical graphs on at most 10 vertices have a spanning cycle.
LemmaReport small_critical_hamiltonian_check(const Graph& g,
                                             const CriticalityReport* cert = nullptr,
                                             long long ham_budget = kDefaultHamBudget);

}  // namespace critic
