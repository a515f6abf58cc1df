#include "exact_chromatic.hpp"

#include <algorithm>
#include <numeric>

#include "vizing.hpp"

namespace critic {

namespace {

struct Solver {
  const Graph& g;
  int k, words, m;
  long long budget;
  long long nodes = 0;
  bool out_of_budget = false;
  std::vector<int> order;            // edge ids, static search order
  std::vector<uint64_t> avail;       // per vertex, colors still free
  std::vector<int> uncolored_deg;    // per vertex
  std::vector<int> chosen;           // per order position, color or 0
  std::vector<uint64_t> full_masks;  // prefix masks for symmetry breaking

  Solver(const Graph& graph, int palette, long long node_budget)
      : g(graph), k(palette), words((palette + 63) / 64), m(graph.size()), budget(node_budget) {
    order.resize(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      auto [au, av] = g.edge(a);
      auto [bu, bv] = g.edge(b);
      int da = g.degree(au) + g.degree(av), db = g.degree(bu) + g.degree(bv);
      if (da != db) return da > db;
      return a < b;
    });
    avail.assign((size_t)g.order() * words, 0);
    for (int v = 0; v < g.order(); ++v)
      for (int w = 0; w < words; ++w) {
        uint64_t bits = ~0ULL;
        if (w == words - 1 && k % 64 != 0) bits = (1ULL << (k % 64)) - 1;
        if (k == 0) bits = 0;
        avail[(size_t)v * words + w] = bits;
      }
    uncolored_deg.resize(g.order());
    for (int v = 0; v < g.order(); ++v) uncolored_deg[v] = g.degree(v);
    chosen.assign(m, 0);
  }

  bool color_ok(int v) const {
    int free_count = 0;
    for (int w = 0; w < words; ++w) free_count += __builtin_popcountll(avail[(size_t)v * words + w]);
    return free_count >= uncolored_deg[v];
  }

  void take(int v, int c) { avail[(size_t)v * words + (c - 1) / 64] &= ~(1ULL << ((c - 1) % 64)); }
  void give(int v, int c) { avail[(size_t)v * words + (c - 1) / 64] |= 1ULL << ((c - 1) % 64); }

  bool dfs(int pos, int max_used) {
    if (pos == m) return true;
    int eid = order[pos];
    auto [u, v] = g.edge(eid);
    int limit = std::min(max_used + 1, k);
    for (int w = 0; w < words; ++w) {
      uint64_t cand = avail[(size_t)u * words + w] & avail[(size_t)v * words + w];
      // symmetry breaking: only allow colors 1..max_used+1
      if (w * 64 >= limit)
        cand = 0;
      else if ((w + 1) * 64 > limit)
        cand &= (limit % 64 == 0) ? ~0ULL : (1ULL << (limit % 64)) - 1;
      while (cand) {
        int bit = __builtin_ctzll(cand);
        cand &= cand - 1;
        int c = w * 64 + bit + 1;
        if (++nodes > budget) {
          out_of_budget = true;
          return false;
        }
        take(u, c);
        take(v, c);
        --uncolored_deg[u];
        --uncolored_deg[v];
        chosen[pos] = c;
        if (color_ok(u) && color_ok(v) && dfs(pos + 1, std::max(max_used, c))) return true;
        chosen[pos] = 0;
        ++uncolored_deg[u];
        ++uncolored_deg[v];
        give(u, c);
        give(v, c);
        if (out_of_budget) return false;
      }
    }
    return false;
  }
};

}  // namespace

ExactColoring solve_edge_coloring(const Graph& g, int k, long long budget) {
  if (k < 0) fail(Err::BadParam, "palette size must be nonnegative");
  if (budget <= 0) fail(Err::BadParam, "budget must be positive");
  ExactColoring out;
  if (g.max_degree() > k) {
    out.status = ExactColoring::Infeasible;  // some vertex alone needs more colors
    return out;
  }
  Solver s(g, k, budget);
  bool found = s.dfs(0, 0);
  out.nodes = s.nodes;
  if (found) {
    out.status = ExactColoring::Found;
    out.coloring = EdgeColoring(g, k);
    for (int pos = 0; pos < s.m; ++pos) out.coloring.assign(g, s.order[pos], s.chosen[pos]);
  } else {
    out.status = s.out_of_budget ? ExactColoring::Budget : ExactColoring::Infeasible;
  }
  return out;
}

ChromaticIndex chromatic_index(const Graph& g, long long budget) {
  ChromaticIndex out;
  int delta = g.max_degree();
  if (delta == 0) {
    out.status = ChromaticIndex::Exact;
    out.value = 0;
    out.witness = EdgeColoring(g, 0);
    return out;
  }
  ExactColoring at_delta = solve_edge_coloring(g, delta, budget);
  out.nodes = at_delta.nodes;
  if (at_delta.status == ExactColoring::Found) {
    out.status = ChromaticIndex::Exact;
    out.value = delta;
    out.witness = std::move(at_delta.coloring);
    return out;
  }
  if (at_delta.status == ExactColoring::Infeasible) {
    out.status = ChromaticIndex::Exact;
    out.value = delta + 1;
    out.class_two = true;
    out.witness = vizing_color(g);  // guaranteed palette delta+1
    return out;
  }
  out.status = ChromaticIndex::Budget;
  return out;
}

}  // namespace critic
