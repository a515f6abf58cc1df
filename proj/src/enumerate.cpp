#include "enumerate.hpp"

#include <algorithm>
#include <map>

namespace critic {

namespace {

using Cells = std::vector<std::vector<int>>;

// Split cells by neighbor counts against every cell until stable.  The split
// order (ascending count vectors) is part of the canonical form's definition,
// so it must never change.
void refine(const Graph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t ci = 0; ci < cells.size(); ++ci) {
      if (cells[ci].size() <= 1) continue;
      std::vector<std::pair<std::vector<int>, int>> keyed;
      keyed.reserve(cells[ci].size());
      for (int v : cells[ci]) {
        std::vector<int> key;
        key.reserve(cells.size());
        for (const auto& cell : cells) {
          int cnt = 0;
          for (int w : cell) cnt += g.adjacent(v, w) ? 1 : 0;
          key.push_back(cnt);
        }
        keyed.emplace_back(std::move(key), v);
      }
      std::stable_sort(keyed.begin(), keyed.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
      bool uniform = true;
      for (size_t i = 1; i < keyed.size(); ++i)
        if (keyed[i].first != keyed[0].first) {
          uniform = false;
          break;
        }
      if (uniform) continue;
      Cells pieces;
      for (size_t i = 0; i < keyed.size(); ++i) {
        if (i == 0 || keyed[i].first != keyed[i - 1].first) pieces.emplace_back();
        pieces.back().push_back(keyed[i].second);
      }
      for (auto& piece : pieces) std::sort(piece.begin(), piece.end());
      cells.erase(cells.begin() + ci);
      cells.insert(cells.begin() + ci, pieces.begin(), pieces.end());
      changed = true;
      break;  // restart the scan with the new cell list
    }
  }
}

size_t code_words(int n) {
  long long bits = (long long)n * (n - 1) / 2;
  return (size_t)((bits + 63) / 64);
}

// Pack the upper triangle of the relabeled adjacency matrix MSB-first so that
// vector comparison == lexicographic comparison of the bitstring.
std::vector<uint64_t> extract_code(const Graph& g, const std::vector<int>& perm) {
  int n = g.order();
  std::vector<uint64_t> code(code_words(n), 0);
  long long t = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++t)
      if (g.adjacent(perm[i], perm[j])) code[t / 64] |= 1ULL << (63 - t % 64);
  return code;
}

struct CanonSearch {
  const Graph& g;
  std::vector<uint64_t> best_code;
  std::vector<int> best_perm;
  bool have_best = false;

  explicit CanonSearch(const Graph& graph) : g(graph) {}

  void run(Cells cells) {
    refine(g, cells);
    int target = -1;
    for (size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1) {
        target = (int)i;
        break;
      }
    if (target < 0) {
      std::vector<int> perm;
      perm.reserve(g.order());
      for (const auto& cell : cells) perm.push_back(cell[0]);
      auto code = extract_code(g, perm);
      if (!have_best || code < best_code) {
        best_code = std::move(code);
        best_perm = std::move(perm);
        have_best = true;
      }
      return;
    }
    for (int v : cells[target]) {
      Cells child = cells;
      std::vector<int> rest;
      for (int w : cells[target])
        if (w != v) rest.push_back(w);
      child[target] = {v};
      child.insert(child.begin() + target + 1, rest);
      run(std::move(child));
    }
  }
};

void canon(const Graph& g, std::vector<uint64_t>* code, std::vector<int>* perm) {
  if (g.order() == 0) {
    if (code) code->clear();
    if (perm) perm->clear();
    return;
  }
  Cells start(1);
  for (int v = 0; v < g.order(); ++v) start[0].push_back(v);
  CanonSearch search(g);
  search.run(std::move(start));
  if (code) *code = search.best_code;
  if (perm) *perm = search.best_perm;
}

}  // namespace

std::vector<uint64_t> canonical_code(const Graph& g) {
  std::vector<uint64_t> code;
  canon(g, &code, nullptr);
  return code;
}

std::vector<int> canonical_labeling(const Graph& g) {
  std::vector<int> perm;
  canon(g, nullptr, &perm);
  return perm;
}

Graph canonical_form(const Graph& g) {
  auto perm = canonical_labeling(g);
  std::vector<int> pos(g.order());
  for (int i = 0; i < g.order(); ++i) pos[perm[i]] = i;
  std::vector<std::pair<int, int>> es;
  es.reserve(g.size());
  for (auto [u, v] : g.edges()) es.emplace_back(pos[u], pos[v]);
  return Graph::build(g.order(), std::move(es));
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_code(a) == canonical_code(b);
}

void enumerate_all(int n, const std::function<void(const Graph&)>& yield) {
  if (n < 1) fail(Err::BadParam, "enumeration needs n >= 1");
  if (n > 8) fail(Err::UnsupportedOrder, "enumeration is capped at n = 8");
  std::vector<Graph> reps{Graph::build(1, {})};
  for (int k = 2; k <= n; ++k) {
    // every graph on k vertices is some graph on k-1 vertices plus one vertex,
    // so extending each representative by all possible neighborhoods and
    // deduplicating by canonical code is exhaustive; representatives are kept
    // in canonical labeling so downstream graph6 output is stable
    std::map<std::vector<uint64_t>, Graph> next;
    for (const Graph& rep : reps) {
      for (uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
        std::vector<std::pair<int, int>> es = rep.edges();
        for (int v = 0; v < k - 1; ++v)
          if ((mask >> v) & 1) es.emplace_back(v, k - 1);
        Graph cand = Graph::build(k, std::move(es));
        std::vector<uint64_t> code;
        std::vector<int> perm;
        canon(cand, &code, &perm);
        if (next.count(code)) continue;
        std::vector<int> pos(k);
        for (int i = 0; i < k; ++i) pos[perm[i]] = i;
        std::vector<std::pair<int, int>> ces;
        ces.reserve(cand.size());
        for (auto [u, v] : cand.edges()) ces.emplace_back(pos[u], pos[v]);
        next.emplace(std::move(code), Graph::build(k, std::move(ces)));
      }
    }
    reps.clear();
    reps.reserve(next.size());
    for (auto& [code, graph] : next) reps.push_back(std::move(graph));
  }
  for (const Graph& g : reps) yield(g);
}

std::vector<Graph> enumerate_all(int n) {
  std::vector<Graph> out;
  enumerate_all(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace critic
