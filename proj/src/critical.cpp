#include "critical.hpp"

#include <algorithm>

#include "enumerate.hpp"
#include "graph6.hpp"

namespace critic {

EdgeCriticality is_critical_edge(const Graph& g, int eid, long long budget) {
  g.edge(eid);  // validates the id
  EdgeCriticality out;
  ChromaticIndex whole = chromatic_index(g, budget);
  out.nodes += whole.nodes;
  if (whole.status != ChromaticIndex::Exact) return out;
  ChromaticIndex reduced = chromatic_index(g.remove_edge(eid), budget);
  out.nodes += reduced.nodes;
  if (reduced.status != ChromaticIndex::Exact) return out;
  out.chi = whole.value;
  out.chi_minus = reduced.value;
  out.outcome = reduced.value < whole.value ? EdgeCriticality::Yes : EdgeCriticality::No;
  return out;
}

CriticalityReport edge_delta_criticality(const Graph& g, long long budget) {
  CriticalityReport rep;
  rep.delta = g.max_degree();
  rep.connected = g.connected();
  ChromaticIndex whole = chromatic_index(g, budget);
  rep.nodes += whole.nodes;
  if (whole.status != ChromaticIndex::Exact) {
    rep.complete = false;
    return rep;
  }
  rep.chi = whole.value;
  rep.class_two = whole.class_two;
  if (!rep.connected || !rep.class_two) return rep;  // verdict already settled
  rep.removal_chi.assign(g.size(), -1);
  bool all_drop = true;
  for (int eid = 0; eid < g.size(); ++eid) {
    ChromaticIndex reduced = chromatic_index(g.remove_edge(eid), budget);
    rep.nodes += reduced.nodes;
    if (reduced.status != ChromaticIndex::Exact) {
      rep.complete = false;
      return rep;
    }
    rep.removal_chi[eid] = reduced.value;
    if (reduced.value != rep.delta) all_drop = false;
  }
  rep.is_delta_critical = all_drop;
  return rep;
}

CorpusResult critical_corpus(int n_max, long long budget) {
  if (n_max < 1) fail(Err::BadParam, "corpus bound must be at least 1");
  if (n_max > 8) fail(Err::UnsupportedOrder, "corpus enumeration is capped at n = 8");
  CorpusResult out;
  for (int n = 1; n <= n_max; ++n) {
    enumerate_all(n, [&](const Graph& g) {
      ++out.graphs_examined;
      if (g.size() == 0 || !g.connected()) return;
      CriticalityReport rep = edge_delta_criticality(g, budget);
      if (!rep.complete) {
        out.complete = false;
        return;
      }
      if (rep.is_delta_critical) out.entries.push_back({g, to_graph6(g), rep.delta, rep.chi});
    });
  }
  std::sort(out.entries.begin(), out.entries.end(), [](const CorpusEntry& a, const CorpusEntry& b) {
    if (a.graph.order() != b.graph.order()) return a.graph.order() < b.graph.order();
    return a.graph6 < b.graph6;
  });
  return out;
}

}  // namespace critic
