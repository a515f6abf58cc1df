#include "feasible.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

#include "exact_chromatic.hpp"
#include "graph6.hpp"
#include "vizing.hpp"

namespace critic {

namespace {

int other_end(const Graph& g, int eid, int v) {
  auto [a, b] = g.edge(eid);
  return a == v ? b : a;
}

std::vector<uint64_t> missing_bits(const EdgeColoring& c, int v) {
  int words = (c.palette() + 63) / 64;
  std::vector<uint64_t> out(words, 0);
  for (int col : c.missing(v)) out[(col - 1) / 64] |= 1ULL << ((col - 1) % 64);
  return out;
}

bool bit(const std::vector<uint64_t>& w, int col) {
  return (w[(col - 1) / 64] >> ((col - 1) % 64)) & 1ULL;
}

std::vector<uint64_t> bits_or(std::vector<uint64_t> a, const std::vector<uint64_t>& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] |= b[i];
  return a;
}

// Rebuild with color classes c1 <-> c2 exchanged everywhere.
EdgeColoring relabel_classes(const Graph& g, const EdgeColoring& c, int c1, int c2) {
  if (c1 == c2) return c;
  EdgeColoring out(g, c.palette());
  for (int e = 0; e < g.size(); ++e) {
    int col = c.color(e);
    if (col == 0) continue;
    if (col == c1)
      col = c2;
    else if (col == c2)
      col = c1;
    out.assign(g, e, col);
  }
  return out;
}

struct ConfigSets {
  std::vector<int> Z, Y, Cz, Cy, T0;
};

// The shared set computation.  Pair mode passes w >= 0 (the second pivot);
// single mode passes w = -1 and x2 plays the plain second endpoint y.
ConfigSets compute_sets(const Graph& g, const EdgeColoring& c, int x, int x2, int z, int w,
                        const Rational& q) {
  ConfigSets s;
  auto miss_x = missing_bits(c, x);
  auto miss_x2 = missing_bits(c, x2);
  auto miss_z = missing_bits(c, z);
  auto miss_w = w >= 0 ? missing_bits(c, w) : std::vector<uint64_t>();

  auto z_cond = w >= 0 ? bits_or(bits_or(miss_x, miss_x2), miss_w) : bits_or(miss_x, miss_x2);
  std::vector<char> cz_seen((size_t)c.palette() + 1, 0), cy_seen((size_t)c.palette() + 1, 0);
  for (int v : g.neighbors(z)) {
    if (v == x) continue;
    int col = c.color(g.edge_id(v, z));
    if (col == 0 || !bit(z_cond, col)) continue;
    s.Z.push_back(v);
    if (Rational(g.degree(v)) < q && !cz_seen[col]) {
      cz_seen[col] = 1;
      s.Cz.push_back(col);
    }
  }

  int y_anchor = w >= 0 ? w : x2;  // vertex whose neighborhood forms Y
  int y_excl = w >= 0 ? x2 : x;    // excluded neighbor
  auto y_cond = w >= 0 ? bits_or(bits_or(miss_x, miss_x2), miss_z) : bits_or(miss_x, miss_z);
  for (int v : g.neighbors(y_anchor)) {
    if (v == y_excl) continue;
    int col = c.color(g.edge_id(v, y_anchor));
    if (col == 0 || !bit(y_cond, col)) continue;
    s.Y.push_back(v);
    if (Rational(g.degree(v)) < q && !cy_seen[col]) {
      cy_seen[col] = 1;
      s.Cy.push_back(col);
    }
  }

  for (int k = 1; k <= c.palette(); ++k) {
    bool present = c.seen(x, k) && c.seen(x2, k) && c.seen(z, k) && c.seen(y_anchor, k);
    if (w >= 0) present = present && c.seen(w, k);
    if (!present) continue;
    int zk = other_end(g, c.edge_with_color(z, k), z);
    int yk = other_end(g, c.edge_with_color(y_anchor, k), y_anchor);
    if (Rational(g.degree(zk)) < q && Rational(g.degree(yk)) < q) s.T0.push_back(k);
  }
  std::sort(s.Z.begin(), s.Z.end());
  std::sort(s.Y.begin(), s.Y.end());
  std::sort(s.Cz.begin(), s.Cz.end());
  std::sort(s.Cy.begin(), s.Cy.end());
  return s;
}

std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

FeasibleContext feasible_context(const Graph& g, int eid, int x, int z, int y_pivot,
                                 const EdgeColoring& c, const Rational& q) {
  if (eid < 0 || eid >= g.size()) fail(Err::NotAnEdge, "edge id out of range");
  auto [a, b] = g.edge(eid);
  if (x != a && x != b) fail(Err::BadParam, "x must be an endpoint of the uncolored edge");
  int y = x == a ? b : a;
  int delta = g.max_degree();
  if (c.palette() != delta) fail(Err::Feasibility, "palette must equal the maximum degree");
  if (c.color(eid) != 0) fail(Err::Feasibility, "the designated edge must be uncolored");
  if (c.colored_count() != g.size() - 1)
    fail(Err::Feasibility, "every edge except the designated one must be colored");
  int exz = g.edge_id(x, z);
  if (z == y || exz < 0) fail(Err::BadParam, "pivot must be a neighbor of x other than the opposite endpoint");

  FeasibleContext ctx;
  ctx.mode = y_pivot < 0 ? FeasMode::Single : FeasMode::Pair;
  ctx.edge = eid;
  ctx.x = x;
  ctx.y = y;
  ctx.z = z;
  ctx.q = q;

  int col1 = c.color(exz);
  if (c.seen(y, col1))
    fail(Err::Feasibility, "pivot edge color must be missing at the opposite endpoint");

  if (ctx.mode == FeasMode::Pair) {
    int eyw = g.edge_id(y, y_pivot);
    if (y_pivot == x || y_pivot == z || eyw < 0)
      fail(Err::BadParam, "second pivot must be a neighbor of the second endpoint, distinct from x and z");
    int col2 = c.color(eyw);
    if (c.seen(x, col2)) fail(Err::Feasibility, "second pivot edge color must be missing at x");
    ctx.y_pivot = y_pivot;
  }

  // normalize: first pivot edge -> color 1, second -> color 2
  ctx.phi = relabel_classes(g, c, col1, 1);
  if (ctx.mode == FeasMode::Pair) {
    int col2 = ctx.phi.color(g.edge_id(y, y_pivot));
    ctx.phi = relabel_classes(g, ctx.phi, col2, 2);
  }

  auto sets = compute_sets(g, ctx.phi, x, y, z, ctx.y_pivot, q);
  ctx.Z = std::move(sets.Z);
  ctx.Y = std::move(sets.Y);
  ctx.Cz = std::move(sets.Cz);
  ctx.Cy = std::move(sets.Cy);
  ctx.T0 = std::move(sets.T0);
  ctx.R = sorted_union(ctx.Cz, ctx.Cy);
  if (ctx.mode == FeasMode::Pair) ctx.Rprime = sorted_union(ctx.R, {1, 2});

  ctx.z_partner.assign((size_t)delta + 1, -1);
  ctx.y_partner.assign((size_t)delta + 1, -1);
  int y_anchor = ctx.mode == FeasMode::Pair ? y_pivot : y;
  for (int k = 1; k <= delta; ++k) {
    int ez = ctx.phi.edge_with_color(z, k);
    if (ez >= 0) ctx.z_partner[k] = other_end(g, ez, z);
    int ey = ctx.phi.edge_with_color(y_anchor, k);
    if (ey >= 0) ctx.y_partner[k] = other_end(g, ey, y_anchor);
  }
  return ctx;
}

EdgeColoring dual_coloring(const Graph& g, const FeasibleContext& ctx) {
  if (ctx.mode != FeasMode::Single) fail(Err::BadParam, "dual transform is defined for single mode only");
  EdgeColoring out = ctx.phi;
  int exz = g.edge_id(ctx.x, ctx.z);
  int col = out.color(exz);
  out.unassign(g, exz);
  out.assign(g, ctx.edge, col);
  return out;
}

namespace {

struct LexScore {
  int sum = -1;       // |Cz| + |Cy|, -1 when no feasible configuration
  int neg_inter = 0;  // -|Cz ∩ Cy|
  bool operator>=(const LexScore& o) const {
    return sum != o.sum ? sum > o.sum : neg_inter >= o.neg_inter;
  }
};

struct WalkState {
  // universal statement tracking
  bool violated = false;
  njson violation;
  int max_cz = -1, max_cy = -1;
  // existential statement tracking
  long long best_t0 = -1;
  bool found = false;
  njson found_witness;
  uint64_t visits = 0;
};

int inter_size(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return (int)out.size();
}

}  // namespace

LemmaReport verify_coloring_statements(const Graph& g, int eid, const Rational& q,
                                       const StatementBudget& budget, uint64_t seed) {
  LemmaReport r;
  r.lemma = "statements";
  r.graph6 = to_graph6(g);
  if (eid < 0 || eid >= g.size()) fail(Err::NotAnEdge, "edge id out of range");
  auto [u, v] = g.edge(eid);
  int delta = g.max_degree();
  r.params["edge"] = njson::array({u, v});
  r.params["q"] = q.str();

  if (!(Rational(0) < q) || !(q <= Rational(delta - 10))) {
    r.verdict = Verdict::PremiseUnsatisfied;
    r.params["note"] = "q must lie in (0, max_degree - 10]";
    return r;
  }

  Rational half(delta, 2);
  int du = g.degree(u), dv = g.degree(v);
  int x = -1;
  if (Rational(du) < half && (du < dv || (du == dv))) x = u;
  else if (Rational(dv) < half) x = v;
  else if (Rational(du) < half) x = u;

  FeasMode mode;
  int y;
  if (x >= 0) {
    mode = FeasMode::Single;
    y = x == u ? v : u;
  } else if (Rational(du + dv) < Rational(3 * delta, 2) && Rational(g.min_degree()) >= half) {
    mode = FeasMode::Pair;
    x = u;
    y = v;
  } else {
    r.verdict = Verdict::PremiseUnsatisfied;
    r.params["note"] = "neither the low-degree premise nor the degree-sum premise applies";
    return r;
  }
  r.params["mode"] = mode == FeasMode::Single ? "SINGLE" : "PAIR";
  r.params["x"] = x;

  Rational gap = Rational(delta) - q;
  Rational bound1, bound2;
  if (mode == FeasMode::Single) {
    bound1 = Rational(g.degree(x) - 2) / gap;
    bound2 = Rational(4 * g.degree(x) - 4) / gap + Rational(8 * (g.degree(x) - 2)) / (gap * gap);
  } else {
    int s = du + dv;
    bound1 = Rational(s - delta - 2) / gap;
    bound2 = Rational(4 * (s - delta)) / gap + Rational(8 * (s - delta - 2)) / (gap * gap);
  }
  bool degenerate = !(Rational(0) < bound1);
  r.params["degenerate"] = degenerate;

  // Seed coloring of G - e on at most delta colors: the constructive fan
  // coloring when it happens to fit, the exact solver otherwise.
  Graph reduced = g.remove_edge(eid);
  auto lift = [&](const EdgeColoring& rc) -> std::optional<EdgeColoring> {
    std::vector<int> remap((size_t)rc.palette() + 1, 0);
    int next = 0;
    for (int e = 0; e < reduced.size(); ++e) {
      int col = rc.color(e);
      if (col == 0) return std::nullopt;
      if (!remap[col]) {
        if (next == delta) return std::nullopt;
        remap[col] = ++next;
      }
    }
    EdgeColoring out(g, delta);
    for (int e = 0; e < reduced.size(); ++e) {
      auto [a, b] = reduced.edge(e);
      out.assign(g, g.edge_id(a, b), remap[rc.color(e)]);
    }
    return out;
  };
  std::optional<EdgeColoring> seeded = lift(vizing_color(reduced));
  if (!seeded) {
    auto solved = solve_edge_coloring(reduced, delta, budget.chi_budget);
    if (solved.status == ExactColoring::Infeasible) {
      r.verdict = Verdict::PremiseUnsatisfied;
      r.params["note"] = "the graph minus the designated edge admits no coloring on max_degree colors";
      r.rhs = bound1.str();
      return r;
    }
    if (solved.status == ExactColoring::Budget) {
      r.verdict = Verdict::Inconclusive;
      r.params["note"] = "no max-degree coloring of the reduced graph within budget";
      r.rhs = bound1.str();
      return r;
    }
    seeded = lift(solved.coloring);
  }
  const EdgeColoring base = *seeded;

  WalkState ws;

  // One pass over the feasible configurations of a coloring: records visits,
  // checks the universal bound, advances the existential search.
  auto scan = [&](const EdgeColoring& c) -> LexScore {
    LexScore best;
    auto miss_y = missing_bits(c, y);
    auto consider = [&](int zz, int ww) {
      auto sets = compute_sets(g, c, x, y, zz, ww, q);
      ++ws.visits;
      int cz = (int)sets.Cz.size(), cy = (int)sets.Cy.size();
      ws.max_cz = std::max(ws.max_cz, cz);
      ws.max_cy = std::max(ws.max_cy, cy);
      // the strict bound degenerates when its numerator vanishes; the empty
      // set is the residual truth in that case
      bool ok = (cz == 0 || Rational(cz) < bound1) && (cy == 0 || Rational(cy) < bound1);
      if (!ok && !ws.violated) {
        ws.violated = true;
        ws.violation = njson{{"z", zz},      {"y_pivot", ww},          {"Cz", sets.Cz},
                             {"Cy", sets.Cy}, {"coloring", c.to_json(g)}};
      }
      long long t0 = (long long)sets.T0.size();
      if (ws.best_t0 < 0 || t0 < ws.best_t0) ws.best_t0 = t0;
      if (!ws.found && Rational(t0) <= bound2) {
        ws.found = true;
        ws.found_witness = njson{{"z", zz}, {"y_pivot", ww}, {"T0", sets.T0}, {"coloring", c.to_json(g)}};
      }
      LexScore sc{cz + cy, -inter_size(sets.Cz, sets.Cy)};
      if (!(best >= sc)) best = sc;
    };
    if (mode == FeasMode::Single) {
      for (int zz : g.neighbors(x)) {
        if (zz == y) continue;
        if (!bit(miss_y, c.color(g.edge_id(x, zz)))) continue;
        consider(zz, -1);
      }
    } else {
      auto miss_x = missing_bits(c, x);
      for (int zz : g.neighbors(x)) {
        if (zz == y || !bit(miss_y, c.color(g.edge_id(x, zz)))) continue;
        for (int ww : g.neighbors(y)) {
          if (ww == x || ww == zz || !bit(miss_x, c.color(g.edge_id(y, ww)))) continue;
          consider(zz, ww);
        }
      }
    }
    return best;
  };

  // Targeted repair: recolor so the first pivot candidate becomes feasible by
  // switching the two-colored chain through the pivot edge, provided the
  // opposite endpoint stays off the chain (its missing set is then untouched).
  auto repair = [&](EdgeColoring& c) -> bool {
    auto try_fix = [&](int at, int opposite) -> bool {
      for (int zz : g.neighbors(at)) {
        if (zz == (at == x ? y : x)) continue;
        int alpha = c.color(g.edge_id(at, zz));
        for (int beta : c.missing(opposite)) {
          if (beta == alpha) continue;
          auto chain = kempe_chain(g, c, at, alpha, beta);
          bool hits = false;
          for (int cv : chain.vertices)
            if (cv == opposite) {
              hits = true;
              break;
            }
          if (hits) continue;
          kempe_switch_inplace(g, c, at, alpha, beta);
          return true;
        }
        break;  // only the first candidate pivot is targeted; others via the random walk
      }
      return false;
    };
    if (mode == FeasMode::Single) return try_fix(x, y);
    // pair mode: make the x-side pivot feasible first, then the y-side
    auto miss_y = missing_bits(c, y);
    bool x_side_ok = false;
    for (int zz : g.neighbors(x))
      if (zz != y && bit(miss_y, c.color(g.edge_id(x, zz)))) x_side_ok = true;
    if (!x_side_ok) return try_fix(x, y);
    return try_fix(y, x);
  };

  EdgeColoring cur = base;
  LexScore score = scan(cur);
  uint64_t state = mix_seed(seed, "stmt:" + q.str(), (uint64_t)eid, 1);
  uint64_t steps = 0;
  uint32_t since_restart = 0;
  while (steps < budget.max_steps && !ws.violated &&
         (ws.visits < budget.target_visits || !ws.found)) {
    ++steps;
    ++since_restart;
    if (since_restart >= budget.restart_period) {
      since_restart = 0;
      cur = base;
      int jitter = 1 + (int)(steps / budget.restart_period % 5);
      for (int j = 0; j < jitter && delta >= 2; ++j) {
        int vv = (int)uniform_below(state, (uint64_t)g.order());
        int ca = 1 + (int)uniform_below(state, (uint64_t)delta);
        int cb = 1 + (int)uniform_below(state, (uint64_t)(delta - 1));
        if (cb >= ca) ++cb;
        kempe_switch_inplace(g, cur, vv, ca, cb);
      }
      score = scan(cur);
      continue;
    }
    if (score.sum < 0) {
      if (repair(cur)) {
        score = scan(cur);
        continue;
      }
    }
    if (delta < 2) break;
    int vv = (int)uniform_below(state, (uint64_t)g.order());
    int ca = 1 + (int)uniform_below(state, (uint64_t)delta);
    int cb = 1 + (int)uniform_below(state, (uint64_t)(delta - 1));
    if (cb >= ca) ++cb;
    kempe_switch_inplace(g, cur, vv, ca, cb);
    LexScore next = scan(cur);
    if (next >= score)
      score = next;
    else
      kempe_switch_inplace(g, cur, vv, ca, cb);  // involution: undo the move
  }

  r.params["visits"] = ws.visits;
  r.params["steps"] = steps;
  njson stmt1{{"max_cz", ws.max_cz}, {"max_cy", ws.max_cy}, {"bound", bound1.str()}};
  njson stmt2{{"found", ws.found}, {"best_t0", ws.best_t0}, {"bound", bound2.str()}};
  r.lhs = Rational(std::max(std::max(ws.max_cz, ws.max_cy), 0)).str();
  r.rhs = bound1.str();
  if (ws.violated) {
    stmt1["verdict"] = "VIOLATED";
    r.params["stmt1"] = stmt1;
    r.params["stmt2"] = stmt2;
    r.verdict = Verdict::Violated;
    r.witness = ws.violation;
    return r;
  }
  stmt1["verdict"] = ws.visits > 0 ? "HOLDS" : "INCONCLUSIVE";
  stmt2["verdict"] = ws.found ? "HOLDS" : "INCONCLUSIVE";
  r.params["stmt1"] = stmt1;
  r.params["stmt2"] = stmt2;
  if (ws.visits == 0) {
    r.verdict = Verdict::Inconclusive;
    r.params["note"] = "no feasible coloring visited within budget";
  } else if (ws.found) {
    r.verdict = Verdict::Holds;
    r.witness = ws.found_witness;
  } else {
    r.verdict = Verdict::Inconclusive;
    r.params["note"] = "universal bound held on every visit; existential witness not found within budget";
  }
  return r;
}

}  // namespace critic
