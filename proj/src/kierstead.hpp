#pragma once

#include <vector>

#include "coloring.hpp"
#include "graph.hpp"
#include "report.hpp"

namespace critic {

// Alternating structure rooted at an uncolored edge: vertices y0..yp with
// e1 = y0y1 uncolored and every later edge colored with a color missing at
// some earlier vertex of the sequence.
struct KiersteadPath {
  std::vector<int> vertices;  // y0 .. yp
  std::vector<int> edge_ids;  // e1 .. ep, edge_ids[i] joins vertices[i], vertices[i+1]
};

// y0 -e1- y1 -e2- y2 plus fan edges out of y2; the colors of e2 and of every
// fan edge are missing at y0 or at y1.
struct SimpleBroom {
  std::vector<int> vertices;  // y0, y1, y2, then the fan tips
  std::vector<int> edge_ids;  // e1, e2, then one edge y2-tip per tip
};

// Structural validation against the coloring; throws Err::InvalidPath /
// Err::InvalidBroom with a description of the first broken invariant.
void validate_kierstead_path(const Graph& g, const EdgeColoring& c, const KiersteadPath& k);
void validate_simple_broom(const Graph& g, const EdgeColoring& c, const SimpleBroom& b);

// Elementarity of the path vertex set, gated on every vertex from position 2
// on having degree below the maximum ("kierstead_elementary").  For 4-vertex
// paths a second report ("kierstead_p4") covers the sharper clause list that
// holds there: the first two vertices never share a missing color, the whole
// set is elementary when either middle vertex has degree below the maximum,
// and the tip shares at most one missing color with the first two vertices.
std::vector<LemmaReport> kierstead_check(const Graph& g, const EdgeColoring& c, const KiersteadPath& k);

// Elementarity of the broom vertex set, gated on the first two vertices
// missing at least 4 colors between them and min(d(y1), d(y2)) below the
// maximum ("broom_elementary").
LemmaReport broom_check(const Graph& g, const EdgeColoring& c, const SimpleBroom& b);

// Every maximal path / broom rooted at the given uncolored edge, both
// orientations, in deterministic DFS order.  A structure is maximal when no
// further edge can extend it.
std::vector<KiersteadPath> maximal_kierstead_paths(const Graph& g, int root_eid, const EdgeColoring& c);
std::vector<SimpleBroom> maximal_simple_brooms(const Graph& g, int root_eid, const EdgeColoring& c);

}  // namespace critic
