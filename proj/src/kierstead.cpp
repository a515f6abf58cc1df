#include "kierstead.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "graph6.hpp"

namespace critic {

namespace {

// Union of the missing sets along a vertex list, as a palette bitset.
std::vector<uint64_t> missing_union(const EdgeColoring& c, const std::vector<int>& vertices, int upto) {
  int words = (c.palette() + 63) / 64;
  std::vector<uint64_t> acc(words, 0);
  for (int i = 0; i < upto; ++i)
    for (int col : c.missing(vertices[i])) acc[(col - 1) / 64] |= 1ULL << ((col - 1) % 64);
  return acc;
}

bool bit(const std::vector<uint64_t>& w, int col) {
  return (w[(col - 1) / 64] >> ((col - 1) % 64)) & 1ULL;
}

void check_vertices_distinct(const Graph& g, const std::vector<int>& vs, Err err, const char* what) {
  std::vector<int> sorted = vs;
  for (int v : sorted)
    if (v < 0 || v >= g.order()) fail(err, std::string(what) + ": vertex " + std::to_string(v) + " out of range");
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(err, std::string(what) + ": repeated vertex");
}

// Missing-color multiplicity vs distinct count over a vertex set; the set is
// elementary exactly when the two agree.
struct MissingTally {
  long long total = 0;
  long long distinct = 0;
};

MissingTally tally_missing(const EdgeColoring& c, const std::vector<int>& vertices) {
  MissingTally t;
  int words = (c.palette() + 63) / 64;
  std::vector<uint64_t> seen(words, 0);
  for (int v : vertices) {
    for (int col : c.missing(v)) {
      ++t.total;
      uint64_t& w = seen[(col - 1) / 64];
      uint64_t m = 1ULL << ((col - 1) % 64);
      if (!(w & m)) {
        w |= m;
        ++t.distinct;
      }
    }
  }
  return t;
}

njson edge_json(const Graph& g, int eid) {
  auto [u, v] = g.edge(eid);
  return njson::array({u, v});
}

}  // namespace

void validate_kierstead_path(const Graph& g, const EdgeColoring& c, const KiersteadPath& k) {
  if (k.vertices.size() < 2) fail(Err::InvalidPath, "path needs at least two vertices");
  if (k.edge_ids.size() != k.vertices.size() - 1)
    fail(Err::InvalidPath, "path needs exactly one edge per vertex pair");
  check_vertices_distinct(g, k.vertices, Err::InvalidPath, "path");
  for (size_t i = 0; i < k.edge_ids.size(); ++i) {
    int eid = g.edge_id(k.vertices[i], k.vertices[i + 1]);
    if (eid < 0 || eid != k.edge_ids[i])
      fail(Err::InvalidPath, "edge " + std::to_string(i) + " does not join consecutive path vertices");
  }
  if (c.color(k.edge_ids[0]) != 0) fail(Err::InvalidPath, "root edge must be uncolored");
  for (size_t i = 1; i < k.edge_ids.size(); ++i) {
    int col = c.color(k.edge_ids[i]);
    if (col == 0) fail(Err::InvalidPath, "non-root path edge is uncolored");
    // color of e_{i+1} must be missing at one of vertices[0..i]
    auto allowed = missing_union(c, k.vertices, (int)i + 1);
    if (!bit(allowed, col))
      fail(Err::InvalidPath, "color " + std::to_string(col) + " of path edge " + std::to_string(i) +
                                 " is not missing at any earlier vertex");
  }
}

void validate_simple_broom(const Graph& g, const EdgeColoring& c, const SimpleBroom& b) {
  if (b.vertices.size() < 3) fail(Err::InvalidBroom, "broom needs at least three vertices");
  if (b.edge_ids.size() != b.vertices.size() - 1)
    fail(Err::InvalidBroom, "broom needs exactly one edge per vertex beyond the first");
  check_vertices_distinct(g, b.vertices, Err::InvalidBroom, "broom");
  int y0 = b.vertices[0], y1 = b.vertices[1], y2 = b.vertices[2];
  if (g.edge_id(y0, y1) != b.edge_ids[0]) fail(Err::InvalidBroom, "first edge must join the first two vertices");
  if (g.edge_id(y1, y2) != b.edge_ids[1]) fail(Err::InvalidBroom, "second edge must join the second and third vertices");
  for (size_t i = 3; i < b.vertices.size(); ++i)
    if (g.edge_id(y2, b.vertices[i]) != b.edge_ids[i - 1])
      fail(Err::InvalidBroom, "fan edge " + std::to_string(i - 2) + " must join the third vertex to its tip");
  if (c.color(b.edge_ids[0]) != 0) fail(Err::InvalidBroom, "root edge must be uncolored");
  auto allowed = missing_union(c, b.vertices, 2);  // missing at y0 or y1
  for (size_t i = 1; i < b.edge_ids.size(); ++i) {
    int col = c.color(b.edge_ids[i]);
    if (col == 0) fail(Err::InvalidBroom, "non-root broom edge is uncolored");
    if (!bit(allowed, col))
      fail(Err::InvalidBroom, "color " + std::to_string(col) + " of broom edge " + std::to_string(i) +
                                  " is not missing at either of the first two vertices");
  }
}

std::vector<LemmaReport> kierstead_check(const Graph& g, const EdgeColoring& c, const KiersteadPath& k) {
  validate_kierstead_path(g, c, k);
  int delta = g.max_degree();
  std::vector<LemmaReport> out;

  njson params;
  params["path"] = k.vertices;
  params["root"] = edge_json(g, k.edge_ids[0]);

  {
    LemmaReport r;
    r.lemma = "kierstead_elementary";
    r.graph6 = to_graph6(g);
    r.params = params;
    bool premise = true;
    int bad = -1;
    for (size_t j = 2; j < k.vertices.size(); ++j)
      if (g.degree(k.vertices[j]) >= delta) {
        premise = false;
        bad = k.vertices[j];
        break;
      }
    r.params["premise"] = premise;
    if (!premise) {
      r.verdict = Verdict::PremiseUnsatisfied;
      r.params["note"] = "vertex " + std::to_string(bad) + " past position 1 has maximum degree";
    } else {
      auto el = is_elementary(g, c, k.vertices);
      auto t = tally_missing(c, k.vertices);
      r.lhs = Rational(t.total).str();
      r.rhs = Rational(t.distinct).str();
      if (el.elementary) {
        r.verdict = Verdict::Holds;
      } else {
        r.verdict = Verdict::Violated;
        r.witness = njson{{"u", el.u}, {"v", el.v}, {"color", el.color}};
      }
    }
    out.push_back(std::move(r));
  }

  if (k.vertices.size() == 4) {
    int y0 = k.vertices[0], y1 = k.vertices[1], y2 = k.vertices[2], y3 = k.vertices[3];
    LemmaReport r;
    r.lemma = "kierstead_p4";
    r.graph6 = to_graph6(g);
    r.params = params;
    njson items = njson::object();
    njson witness;
    bool violated = false;

    // first two vertices never share a missing color
    if (c.missing_disjoint(y0, y1)) {
      items["head_disjoint"] = "HOLDS";
    } else {
      items["head_disjoint"] = "VIOLATED";
      violated = true;
      for (int col : c.missing(y0))
        if (!c.seen(y1, col) && witness.is_null()) witness = njson{{"clause", "head_disjoint"}, {"color", col}};
    }

    // whole set elementary when a middle vertex has degree below the maximum
    for (auto [key, mid] : {std::pair<const char*, int>{"elementary_if_y2_low", y2},
                            std::pair<const char*, int>{"elementary_if_y1_low", y1}}) {
      if (g.degree(mid) >= delta) {
        items[key] = "SKIPPED";
        continue;
      }
      auto el = is_elementary(g, c, k.vertices);
      if (el.elementary) {
        items[key] = "HOLDS";
      } else {
        items[key] = "VIOLATED";
        violated = true;
        if (witness.is_null()) witness = njson{{"clause", key}, {"u", el.u}, {"v", el.v}, {"color", el.color}};
      }
    }

    // tip shares at most one missing color with the first two vertices
    int shared = 0;
    for (int col : c.missing(y3))
      if (!c.seen(y0, col) || !c.seen(y1, col)) ++shared;
    r.lhs = Rational(shared).str();
    r.rhs = Rational(1).str();
    if (shared <= 1) {
      items["tip_overlap"] = "HOLDS";
    } else {
      items["tip_overlap"] = "VIOLATED";
      violated = true;
      if (witness.is_null()) witness = njson{{"clause", "tip_overlap"}, {"shared", shared}};
    }

    r.params["items"] = items;
    r.verdict = violated ? Verdict::Violated : Verdict::Holds;
    r.witness = witness;
    out.push_back(std::move(r));
  }

  return out;
}

LemmaReport broom_check(const Graph& g, const EdgeColoring& c, const SimpleBroom& b) {
  validate_simple_broom(g, c, b);
  int delta = g.max_degree();
  LemmaReport r;
  r.lemma = "broom_elementary";
  r.graph6 = to_graph6(g);
  r.params["broom"] = b.vertices;
  r.params["root"] = edge_json(g, b.edge_ids[0]);

  auto head = tally_missing(c, {b.vertices[0], b.vertices[1]});
  int min_mid = std::min(g.degree(b.vertices[1]), g.degree(b.vertices[2]));
  bool premise = head.distinct >= 4 && min_mid < delta;
  r.params["premise"] = premise;
  r.params["head_missing"] = head.distinct;
  r.params["min_mid_degree"] = min_mid;
  if (!premise) {
    r.verdict = Verdict::PremiseUnsatisfied;
    return r;
  }

  auto el = is_elementary(g, c, b.vertices);
  auto t = tally_missing(c, b.vertices);
  r.lhs = Rational(t.total).str();
  r.rhs = Rational(t.distinct).str();
  if (el.elementary) {
    r.verdict = Verdict::Holds;
  } else {
    r.verdict = Verdict::Violated;
    r.witness = njson{{"u", el.u}, {"v", el.v}, {"color", el.color}};
  }
  return r;
}

namespace {

struct PathSearch {
  const Graph& g;
  const EdgeColoring& c;
  std::vector<KiersteadPath>& out;
  std::vector<int> verts, eids;
  std::vector<char> used;
  std::vector<uint64_t> allowed;

  void dfs() {
    int tip = verts.back();
    bool extended = false;
    for (int w : g.neighbors(tip)) {
      if (used[w]) continue;
      int eid = g.edge_id(tip, w);
      int col = c.color(eid);
      if (col == 0 || !bit(allowed, col)) continue;
      extended = true;
      verts.push_back(w);
      eids.push_back(eid);
      used[w] = 1;
      auto saved = allowed;
      for (int mc : c.missing(w)) allowed[(mc - 1) / 64] |= 1ULL << ((mc - 1) % 64);
      dfs();
      allowed = saved;
      used[w] = 0;
      verts.pop_back();
      eids.pop_back();
    }
    if (!extended) out.push_back({verts, eids});
  }
};

}  // namespace

std::vector<KiersteadPath> maximal_kierstead_paths(const Graph& g, int root_eid, const EdgeColoring& c) {
  if (root_eid < 0 || root_eid >= g.size()) fail(Err::UnknownEdge, "edge id out of range");
  if (c.color(root_eid) != 0) fail(Err::InvalidPath, "root edge must be uncolored");
  auto [a, b] = g.edge(root_eid);
  std::vector<KiersteadPath> out;
  for (auto [y0, y1] : {std::pair<int, int>{a, b}, std::pair<int, int>{b, a}}) {
    PathSearch s{g, c, out, {y0, y1}, {root_eid}, std::vector<char>((size_t)g.order(), 0),
                 missing_union(c, {y0, y1}, 2)};
    s.used[y0] = s.used[y1] = 1;
    s.dfs();
  }
  return out;
}

std::vector<SimpleBroom> maximal_simple_brooms(const Graph& g, int root_eid, const EdgeColoring& c) {
  if (root_eid < 0 || root_eid >= g.size()) fail(Err::UnknownEdge, "edge id out of range");
  if (c.color(root_eid) != 0) fail(Err::InvalidBroom, "root edge must be uncolored");
  auto [a, b] = g.edge(root_eid);
  std::vector<SimpleBroom> out;
  for (auto [y0, y1] : {std::pair<int, int>{a, b}, std::pair<int, int>{b, a}}) {
    auto allowed = missing_union(c, {y0, y1}, 2);
    for (int y2 : g.neighbors(y1)) {
      if (y2 == y0) continue;
      int e2 = g.edge_id(y1, y2);
      int col = c.color(e2);
      if (col == 0 || !bit(allowed, col)) continue;
      SimpleBroom broom{{y0, y1, y2}, {root_eid, e2}};
      for (int w : g.neighbors(y2)) {
        if (w == y0 || w == y1) continue;
        int eid = g.edge_id(y2, w);
        int wc = c.color(eid);
        if (wc == 0 || !bit(allowed, wc)) continue;
        broom.vertices.push_back(w);
        broom.edge_ids.push_back(eid);
      }
      out.push_back(std::move(broom));
    }
  }
  return out;
}

}  // namespace critic
