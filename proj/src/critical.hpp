#pragma once

#include <string>
#include <vector>

#include "exact_chromatic.hpp"
#include "graph.hpp"

namespace critic {

struct EdgeCriticality {
  enum Outcome { Yes, No, Budget };
  Outcome outcome = Budget;
  int chi = 0;        // chi'(G)
  int chi_minus = 0;  // chi'(G - e)
  long long nodes = 0;
};

// Does removing this edge lower the chromatic index?
EdgeCriticality is_critical_edge(const Graph& g, int eid, long long budget = kDefaultChiBudget);

struct CriticalityReport {
  bool complete = true;  // false when any decision ran out of budget
  bool connected = false;
  int delta = 0;
  int chi = 0;  // 0 when unknown
  bool class_two = false;
  bool is_delta_critical = false;
  // per edge id, chi'(G - e); filled only for connected class-two graphs
  std::vector<int> removal_chi;
  long long nodes = 0;
};

// Full criticality certificate: connected, chi' = max_degree + 1, and every
// single-edge removal drops the chromatic index to max_degree.
CriticalityReport edge_delta_criticality(const Graph& g, long long budget = kDefaultChiBudget);

struct CorpusEntry {
  Graph graph;
  std::string graph6;
  int delta = 0;
  int chi = 0;
};

struct CorpusResult {
  std::vector<CorpusEntry> entries;  // sorted by (order, graph6)
  bool complete = true;
  long long graphs_examined = 0;
};

// Every critical graph on at most n_max vertices (n_max <= 8), produced by
// exhaustive enumeration plus the certificate above.
CorpusResult critical_corpus(int n_max, long long budget = kDefaultChiBudget);

}  // namespace critic
