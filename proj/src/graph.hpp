#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace critic {

// Simple undirected graph with vertices 0..n-1, no loops, no multiedges.
// Edges are kept sorted (u < v, lexicographic) and addressed by index into
// edges(); that index is the edge id used by colorings and searches.
class Graph {
 public:
  Graph() = default;
  static Graph build(int n, std::vector<std::pair<int, int>> edge_list);

  int order() const { return n_; }
  int size() const { return (int)edges_.size(); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::pair<int, int> edge(int eid) const;

  const std::vector<int>& neighbors(int v) const { return nbr_[check_vertex(v)]; }
  const std::vector<int>& incident_edges(int v) const { return nbr_eid_[check_vertex(v)]; }
  int degree(int v) const { return (int)nbr_[check_vertex(v)].size(); }
  int max_degree() const;
  int min_degree() const;

  bool adjacent(int u, int v) const;
  int edge_id(int u, int v) const;  // -1 when uv is not an edge

  bool connected() const;
  std::vector<int> component_of(int v) const;

  Graph remove_edge(int eid) const;
  Graph add_edge(int u, int v) const;

  // adjacency row as bitset words, words() per row
  int words() const { return words_; }
  uint64_t adj_word(int v, int w) const { return adj_[(size_t)v * words_ + w]; }

  std::string to_string() const;  // small debug aid: "n=5 m=4 edges=[...]"

 private:
  int check_vertex(int v) const {
    if (v < 0 || v >= n_) fail(Err::OutOfRange, "vertex " + std::to_string(v) + " outside graph of order " + std::to_string(n_));
    return v;
  }

  int n_ = 0, words_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> nbr_;
  std::vector<std::vector<int>> nbr_eid_;
  std::vector<uint64_t> adj_;
};

// Named families used throughout the test corpus and the CLI.
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_complete_bipartite(int a, int b);
Graph make_star(int n);  // n vertices total: one hub, n-1 leaves
Graph make_petersen();
Graph make_subdivided_complete(int m);  // K_m with one edge split by a new vertex
Graph make_random(int n, const Rational& p, uint64_t seed);

// Family spec strings for the CLI: "petersen", "cycle:7", "complete:5",
// "complete_bipartite:2,3", "path:4", "star:5", "subdivided_complete:12",
// "random:10,1/2,42".
Graph generate(const std::string& family_spec);

struct DegreeProfile {
  std::vector<int> degrees;  // indexed by vertex
  int max_degree = 0;
  int min_degree = 0;
  // for each requested threshold q: the vertex set { v : d(v) >= q }
  std::vector<std::pair<Rational, std::vector<int>>> threshold_sets;
};

DegreeProfile degree_stats(const Graph& g, const std::vector<Rational>& thresholds);
std::vector<int> vertices_with_degree_at_least(const Graph& g, const Rational& q);

// splitmix64: the project-wide deterministic seed scrambler
inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Stable derived seeds: mix a master seed with a textual tag and two indices,
// so parallel work items get reproducible per-item streams.
uint64_t mix_seed(uint64_t seed, const std::string& tag, uint64_t a = 0, uint64_t b = 0);

// Deterministic uniform draw in [0, bound) that does not depend on the
// standard library's distribution implementations.
uint64_t uniform_below(uint64_t& state, uint64_t bound);

}  // namespace critic
