#include "vizing.hpp"

#include <algorithm>

namespace critic {

namespace {

// maximal fan of x seeded with y: each subsequent fan vertex v has its edge
// color at x free at the previous fan vertex; keeps scanning neighbors in
// ascending order until a full pass adds nothing
std::vector<int> maximal_fan(const Graph& g, const EdgeColoring& col, int x, int y) {
  std::vector<int> fan{y};
  bool extended;
  do {
    extended = false;
    for (int v : g.neighbors(x)) {
      int ec = col.color(g.edge_id(x, v));
      if (ec == 0) continue;
      if (col.seen(fan.back(), ec)) continue;
      if (std::find(fan.begin(), fan.end(), v) != fan.end()) continue;
      fan.push_back(v);
      extended = true;
    }
  } while (extended);
  return fan;
}

void color_one(const Graph& g, EdgeColoring& col, int eid) {
  auto [x, y] = g.edge(eid);
  std::vector<int> fan = maximal_fan(g, col, x, y);
  int c = col.first_missing(x);
  int d = col.first_missing(fan.back());
  if (c == 0 || d == 0) fail(Err::Internal, "palette exhausted during fan coloring");
  if (c != d) kempe_switch_inplace(g, col, x, c, d);
  // after inverting the cd-path at x, some fan prefix ends at a vertex where d
  // is free; rotate edge colors along that prefix and finish the edge with d
  int w_idx = -1;
  for (size_t i = 0; i < fan.size(); ++i)
    if (!col.seen(fan[i], d)) {
      w_idx = (int)i;
      break;
    }
  if (w_idx < 0) fail(Err::Internal, "no rotation point in fan");
  std::vector<int> fan_edges(w_idx + 1);
  std::vector<int> old_colors(w_idx + 1);
  for (int i = 0; i <= w_idx; ++i) {
    fan_edges[i] = g.edge_id(x, fan[i]);
    old_colors[i] = col.color(fan_edges[i]);
  }
  for (int i = 0; i <= w_idx; ++i)
    if (old_colors[i] != 0) col.unassign(g, fan_edges[i]);
  for (int i = 0; i < w_idx; ++i) col.assign(g, fan_edges[i], old_colors[i + 1]);
  col.assign(g, fan_edges[w_idx], d);
}

}  // namespace

EdgeColoring vizing_color(const Graph& g) {
  int k = g.size() == 0 ? 0 : g.max_degree() + 1;
  EdgeColoring col(g, k);
  for (int eid = 0; eid < g.size(); ++eid) color_one(g, col, eid);
  return col;
}

}  // namespace critic
