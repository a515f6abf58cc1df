#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graph.hpp"

#include "json.hpp"

namespace critic {

using njson = nlohmann::ordered_json;

// Partial proper edge coloring over palette {1..k}; 0 means uncolored.
// Maintains per-vertex seen-color bitsets and a (vertex, color) -> edge slot
// table so Kempe walks run in time linear in the chain length.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  EdgeColoring(const Graph& g, int k);

  int palette() const { return k_; }
  int color(int eid) const { return color_[eid]; }
  int colored_count() const { return colored_; }
  bool total(const Graph& g) const { return colored_ == g.size(); }
  std::vector<int> uncolored_edges() const;

  bool seen(int v, int c) const { return (seen_[(size_t)v * words_ + (c - 1) / 64] >> ((c - 1) % 64)) & 1ULL; }
  int edge_with_color(int v, int c) const { return slot_[(size_t)v * k_ + (c - 1)]; }
  int missing_count(int v) const;
  std::vector<int> missing(int v) const;       // ascending colors absent at v
  int first_missing(int v) const;              // 0 when v sees the whole palette
  bool missing_disjoint(int u, int v) const;   // phi-bar(u) and phi-bar(v) share no color

  void assign(const Graph& g, int eid, int c);
  void unassign(const Graph& g, int eid);

  uint64_t hash() const;  // stable fingerprint of the assignment

  njson to_json(const Graph& g) const;
  static EdgeColoring from_json(const Graph& g, const njson& j);

  // internal mutator for Kempe switches: flips colors along the given edges
  // (each currently a or b) and rebuilds the indexes of touched vertices
  void swap_colors_on(const Graph& g, const std::vector<int>& edge_ids, int a, int b);

 private:
  void rebuild_vertex(const Graph& g, int v);

  int k_ = 0, n_ = 0, words_ = 0, colored_ = 0;
  std::vector<int> color_;
  std::vector<uint64_t> seen_;
  std::vector<int> slot_;
};

struct ProperCheck {
  bool proper = true;
  int vertex = -1;  // witness: two incident edges of the same color
  int color = 0;
  int edge_a = -1, edge_b = -1;
  std::string what;
};

ProperCheck check_proper(const Graph& g, const EdgeColoring& c);

struct KempeChain {
  enum Kind { Path, EvenCycle };
  Kind kind = Path;
  std::vector<int> vertices;  // cycle: closing edge returns to vertices.front()
  std::vector<int> edge_ids;  // path: vertices.size()-1 edges; cycle: same count as vertices
};

// Component of v in the subgraph of edges colored a or b.
KempeChain kempe_chain(const Graph& g, const EdgeColoring& c, int v, int a, int b);

EdgeColoring kempe_switch(const Graph& g, const EdgeColoring& c, int v, int a, int b);
void kempe_switch_inplace(const Graph& g, EdgeColoring& c, int v, int a, int b);

struct ElementaryCheck {
  bool elementary = true;
  int u = -1, v = -1, color = 0;  // witness: color missing at two listed vertices
};

// A vertex set is elementary when the missing-color sets are pairwise disjoint.
ElementaryCheck is_elementary(const Graph& g, const EdgeColoring& c, const std::vector<int>& vertices);

}  // namespace critic
