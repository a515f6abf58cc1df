#include "coloring.hpp"

#include <algorithm>

namespace critic {

EdgeColoring::EdgeColoring(const Graph& g, int k) {
  if (k < 0) fail(Err::BadParam, "palette size must be nonnegative");
  k_ = k;
  n_ = g.order();
  words_ = (k + 63) / 64;
  color_.assign(g.size(), 0);
  seen_.assign((size_t)n_ * words_, 0);
  slot_.assign((size_t)n_ * k_, -1);
}

std::vector<int> EdgeColoring::uncolored_edges() const {
  std::vector<int> out;
  for (int e = 0; e < (int)color_.size(); ++e)
    if (color_[e] == 0) out.push_back(e);
  return out;
}

int EdgeColoring::missing_count(int v) const {
  int seen_count = 0;
  for (int w = 0; w < words_; ++w) seen_count += __builtin_popcountll(seen_[(size_t)v * words_ + w]);
  return k_ - seen_count;
}

std::vector<int> EdgeColoring::missing(int v) const {
  std::vector<int> out;
  for (int c = 1; c <= k_; ++c)
    if (!seen(v, c)) out.push_back(c);
  return out;
}

int EdgeColoring::first_missing(int v) const {
  for (int w = 0; w < words_; ++w) {
    uint64_t free_bits = ~seen_[(size_t)v * words_ + w];
    if (w == words_ - 1 && k_ % 64 != 0) free_bits &= (1ULL << (k_ % 64)) - 1;
    if (free_bits) return w * 64 + __builtin_ctzll(free_bits) + 1;
  }
  return 0;
}

bool EdgeColoring::missing_disjoint(int u, int v) const {
  for (int w = 0; w < words_; ++w) {
    uint64_t both = ~seen_[(size_t)u * words_ + w] & ~seen_[(size_t)v * words_ + w];
    if (w == words_ - 1 && k_ % 64 != 0) both &= (1ULL << (k_ % 64)) - 1;
    if (both) return false;
  }
  return true;
}

void EdgeColoring::assign(const Graph& g, int eid, int c) {
  if (c < 1 || c > k_) fail(Err::BadParam, "color " + std::to_string(c) + " outside palette 1.." + std::to_string(k_));
  if (color_[eid] != 0) fail(Err::Internal, "assign over an already colored edge");
  auto [u, v] = g.edge(eid);
  if (seen(u, c) || seen(v, c)) fail(Err::Internal, "assign would break properness");
  color_[eid] = c;
  ++colored_;
  seen_[(size_t)u * words_ + (c - 1) / 64] |= 1ULL << ((c - 1) % 64);
  seen_[(size_t)v * words_ + (c - 1) / 64] |= 1ULL << ((c - 1) % 64);
  slot_[(size_t)u * k_ + (c - 1)] = eid;
  slot_[(size_t)v * k_ + (c - 1)] = eid;
}

void EdgeColoring::unassign(const Graph& g, int eid) {
  int c = color_[eid];
  if (c == 0) fail(Err::Internal, "unassign of an uncolored edge");
  auto [u, v] = g.edge(eid);
  color_[eid] = 0;
  --colored_;
  seen_[(size_t)u * words_ + (c - 1) / 64] &= ~(1ULL << ((c - 1) % 64));
  seen_[(size_t)v * words_ + (c - 1) / 64] &= ~(1ULL << ((c - 1) % 64));
  slot_[(size_t)u * k_ + (c - 1)] = -1;
  slot_[(size_t)v * k_ + (c - 1)] = -1;
}

uint64_t EdgeColoring::hash() const {
  uint64_t h = 0xcbf29ce484222325ULL ^ (uint64_t)k_;
  for (int c : color_) {
    h ^= (uint64_t)(c + 1);
    h *= 0x100000001b3ULL;
  }
  return h;
}

njson EdgeColoring::to_json(const Graph& g) const {
  njson edges = njson::array();
  for (int e = 0; e < g.size(); ++e) {
    auto [u, v] = g.edge(e);
    edges.push_back(njson::array({u, v, color_[e]}));
  }
  return njson{{"k", k_}, {"edges", edges}};
}

EdgeColoring EdgeColoring::from_json(const Graph& g, const njson& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("edges") || !j["k"].is_number_integer() || !j["edges"].is_array())
    fail(Err::Malformed, "coloring JSON must be {k, edges}");
  EdgeColoring c(g, j["k"].get<int>());
  std::vector<char> listed(g.size(), 0);
  for (const auto& item : j["edges"]) {
    if (!item.is_array() || item.size() != 3) fail(Err::Malformed, "coloring edge entry must be [u, v, color]");
    int u = item[0].get<int>(), v = item[1].get<int>(), col = item[2].get<int>();
    if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
      fail(Err::OutOfRange, "coloring mentions vertex outside the graph");
    int eid = g.edge_id(u, v);
    if (eid < 0) fail(Err::UnknownEdge, "coloring mentions non-edge " + std::to_string(u) + "-" + std::to_string(v));
    if (listed[eid]) fail(Err::Malformed, "coloring lists edge twice");
    listed[eid] = 1;
    if (col < 0 || col > c.palette()) fail(Err::BadParam, "color outside palette");
    if (col != 0) {
      auto [a, b] = g.edge(eid);
      if (c.seen(a, col) || c.seen(b, col)) fail(Err::Feasibility, "coloring JSON is not proper");
      c.assign(g, eid, col);
    }
  }
  return c;
}

void EdgeColoring::swap_colors_on(const Graph& g, const std::vector<int>& edge_ids, int a, int b) {
  std::vector<int> touched;
  for (int eid : edge_ids) {
    int c = color_[eid];
    if (c != a && c != b) fail(Err::Internal, "swap_colors_on expects edges colored a or b");
    color_[eid] = c == a ? b : a;
    auto [u, v] = g.edge(eid);
    touched.push_back(u);
    touched.push_back(v);
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  for (int v : touched) rebuild_vertex(g, v);
}

void EdgeColoring::rebuild_vertex(const Graph& g, int v) {
  for (int w = 0; w < words_; ++w) seen_[(size_t)v * words_ + w] = 0;
  for (int c = 0; c < k_; ++c) slot_[(size_t)v * k_ + c] = -1;
  const auto& eids = g.incident_edges(v);
  for (int eid : eids) {
    int c = color_[eid];
    if (c == 0) continue;
    seen_[(size_t)v * words_ + (c - 1) / 64] |= 1ULL << ((c - 1) % 64);
    slot_[(size_t)v * k_ + (c - 1)] = eid;
  }
}

ProperCheck check_proper(const Graph& g, const EdgeColoring& c) {
  ProperCheck out;
  std::vector<int> at(c.palette() + 1);
  for (int v = 0; v < g.order(); ++v) {
    std::fill(at.begin(), at.end(), -1);
    const auto& eids = g.incident_edges(v);
    for (int eid : eids) {
      int col = c.color(eid);
      if (col == 0) continue;
      if (col < 0 || col > c.palette()) {
        out.proper = false;
        out.vertex = v;
        out.color = col;
        out.edge_a = eid;
        out.what = "color outside palette";
        return out;
      }
      if (at[col] >= 0) {
        out.proper = false;
        out.vertex = v;
        out.color = col;
        out.edge_a = at[col];
        out.edge_b = eid;
        out.what = "two incident edges share a color";
        return out;
      }
      at[col] = eid;
    }
  }
  return out;
}

namespace {

// walk from v along the edge colored `col`, alternating a/b, stopping at a
// chain end or when the walk closes back at v
void walk_chain(const Graph& g, const EdgeColoring& c, int v, int col, int a, int b,
                std::vector<int>& verts, std::vector<int>& eids, bool& closed) {
  int cur = v, cc = col;
  closed = false;
  while (true) {
    int eid = c.edge_with_color(cur, cc);
    if (eid < 0) return;
    auto [p, q] = g.edge(eid);
    int nxt = p == cur ? q : p;
    eids.push_back(eid);
    if (nxt == v) {
      closed = true;
      return;
    }
    verts.push_back(nxt);
    cur = nxt;
    cc = cc == a ? b : a;
  }
}

}  // namespace

KempeChain kempe_chain(const Graph& g, const EdgeColoring& c, int v, int a, int b) {
  if (a == b || a < 1 || b < 1 || a > c.palette() || b > c.palette())
    fail(Err::BadParam, "kempe chain needs two distinct palette colors");
  if (v < 0 || v >= g.order()) fail(Err::OutOfRange, "kempe chain anchor outside graph");
  KempeChain chain;
  int ea = c.edge_with_color(v, a), eb = c.edge_with_color(v, b);
  if (ea < 0 && eb < 0) {
    chain.vertices = {v};
    return chain;  // degenerate: v meets neither color
  }
  if (ea >= 0 && eb >= 0) {
    std::vector<int> va{v}, ea_ids;
    bool closed = false;
    walk_chain(g, c, v, a, a, b, va, ea_ids, closed);
    if (closed) {
      chain.kind = KempeChain::EvenCycle;
      chain.vertices = std::move(va);
      chain.edge_ids = std::move(ea_ids);
      return chain;
    }
    // open: v is interior; walk the b side and splice the two arms
    std::vector<int> vb{v}, eb_ids;
    bool closed_b = false;
    walk_chain(g, c, v, b, a, b, vb, eb_ids, closed_b);
    std::reverse(va.begin(), va.end());
    std::reverse(ea_ids.begin(), ea_ids.end());
    chain.vertices = std::move(va);
    chain.vertices.insert(chain.vertices.end(), vb.begin() + 1, vb.end());
    chain.edge_ids = std::move(ea_ids);
    chain.edge_ids.insert(chain.edge_ids.end(), eb_ids.begin(), eb_ids.end());
    return chain;
  }
  int col = ea >= 0 ? a : b;
  chain.vertices = {v};
  bool closed = false;
  walk_chain(g, c, v, col, a, b, chain.vertices, chain.edge_ids, closed);
  return chain;
}

void kempe_switch_inplace(const Graph& g, EdgeColoring& c, int v, int a, int b) {
  KempeChain chain = kempe_chain(g, c, v, a, b);
  if (chain.edge_ids.empty()) return;
  c.swap_colors_on(g, chain.edge_ids, a, b);
}

EdgeColoring kempe_switch(const Graph& g, const EdgeColoring& c, int v, int a, int b) {
  EdgeColoring out = c;
  kempe_switch_inplace(g, out, v, a, b);
  return out;
}

ElementaryCheck is_elementary(const Graph& g, const EdgeColoring& c, const std::vector<int>& vertices) {
  (void)g;
  ElementaryCheck out;
  std::vector<int> owner(c.palette() + 1, -1);
  for (int v : vertices) {
    for (int col : c.missing(v)) {
      if (owner[col] >= 0) {
        out.elementary = false;
        out.u = owner[col];
        out.v = v;
        out.color = col;
        return out;
      }
      owner[col] = v;
    }
  }
  return out;
}

}  // namespace critic
