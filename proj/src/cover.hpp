#pragma once

#include <utility>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"
#include "report.hpp"

namespace critic {

// A labelled bipartite instance: vertex labels are arbitrary ints, every edge
// must join the two sides (either orientation).
struct BipartiteInstance {
  std::vector<int> X, Y;
  std::vector<std::pair<int, int>> edges;
};

struct CoverSubgraph {
  bool found = false;
  std::vector<std::pair<int, int>> edges;  // chosen edges, normalized (x, y)
  std::vector<int> left_degree;            // aligned with X
  std::vector<int> right_degree;           // aligned with Y
};

// Subgraph H of the instance with d_H(x) = 2 for every x and d_H(y) <= 2,
// found by integral max flow; found == false means no such H exists.
CoverSubgraph double_cover_subgraph(const BipartiteInstance& inst);

struct ExpansionPremise {
  Rational min_ratio{0};   // min over nonempty S ⊆ X of |N(S)| / |S|
  std::vector<int> worst;  // an attaining S, by label
};

// Exhaustive over all nonempty S ⊆ X; requires |X| <= 20.
ExpansionPremise expansion_premise(const BipartiteInstance& inst);

// The instance a graph induces for the cover lemma: X is the set of vertices
// of degree below max_degree/2, Y its neighborhood, edges the X-Y edges.
BipartiteInstance low_degree_instance(const Graph& g);

// Catalog check: expansion ratio >= 3/2 is the premise, existence of the
// double cover the conclusion.
LemmaReport double_cover_check(const Graph& g);

}  // namespace critic
