#pragma once

#include <vector>

#include "critical.hpp"
#include "graph.hpp"
#include "rational.hpp"
#include "report.hpp"

namespace critic {

// |{ z in N(y)\{x} : d(z) >= q }| — degree counting around the far end of an
// edge; the workhorse quantity behind all the neighborhood bounds here.
long long sigma_q(const Graph& g, int x, int y, const Rational& q);

// The specialization q = 2*max_degree - d(x) - d(y) + 2.
Rational pair_threshold(const Graph& g, int x, int y);
long long woodall_sigma(const Graph& g, int x, int y);

struct SigmaProfile {
  int x = -1;
  Rational q;  // uniform column below uses q = max_degree
  struct Entry {
    int y = -1;
    long long sigma_at_q = 0;      // sigma_q(x, y) at the uniform q
    long long pair_sigma = 0;      // woodall_sigma(x, y)
    Rational pair_q;               // its per-pair threshold
  };
  std::vector<Entry> neighbors;
};

struct WoodallParams {
  long long p_min = 0;
  long long p = 0;  // min(p_min, floor(d(x)/2) - 1)
};

// Requires d(x) >= 1 (p_min minimizes over the neighborhood).
WoodallParams woodall_params(const Graph& g, int x, SigmaProfile* profile = nullptr);

// The three neighborhood checks gated on a criticality certificate:
//   vizing_adjacency   sigma_Delta(x,y) >= Delta - d(x) + 1 on every edge
//   woodall_count      >= Delta - sigma(x,y) vertices z in N(x)\{y} with
//                      sigma(x,z) >= 2*Delta - d(x) - sigma(x,y)
//   woodall_neighbors  >= d(x) - p(x) - 1 neighbors y with
//                      sigma(x,y) >= Delta - p(x) - 1
// When cert is null the certificate is computed here with the given budget.
std::vector<LemmaReport> check_adjacency_lemmas(const Graph& g, long long budget = kDefaultChiBudget,
                                                const CriticalityReport* cert = nullptr);

}  // namespace critic
