#include "walks.hpp"

#include <map>
#include <string>

#include "exact_chromatic.hpp"
#include "graph6.hpp"
#include "kierstead.hpp"

namespace critic {

std::vector<EdgeColoring> sample_delta_colorings(const Graph& g, int eid, std::size_t count,
                                                 uint64_t seed, long long chi_budget) {
  if (eid < 0 || eid >= g.size()) fail(Err::UnknownEdge, "edge id out of range");
  std::vector<EdgeColoring> out;
  if (count == 0) return out;
  int delta = g.max_degree();
  if (delta == 0) return out;

  Graph reduced = g.remove_edge(eid);
  auto solved = solve_edge_coloring(reduced, delta, chi_budget);
  if (solved.status != ExactColoring::Found) return out;

  // re-key the witness onto g's edge ids, leaving eid uncolored
  EdgeColoring base(g, delta);
  for (int re = 0; re < reduced.size(); ++re) {
    auto [u, v] = reduced.edge(re);
    base.assign(g, g.edge_id(u, v), solved.coloring.color(re));
  }
  out.push_back(base);

  uint64_t state = mix_seed(seed, "walk", (uint64_t)eid, 0);
  int n = g.order();
  std::size_t burst = 2 * (std::size_t)g.size() + 5;
  EdgeColoring cur = base;
  while (out.size() < count) {
    for (std::size_t j = 0; j < burst; ++j) {
      int v = (int)uniform_below(state, (uint64_t)n);
      if (delta < 2) continue;
      int a = 1 + (int)uniform_below(state, (uint64_t)delta);
      int b = 1 + (int)uniform_below(state, (uint64_t)(delta - 1));
      if (b >= a) ++b;
      kempe_switch_inplace(g, cur, v, a, b);
    }
    out.push_back(cur);
  }
  return out;
}

namespace {

struct SlugTally {
  long long structures = 0;
  long long premise_held = 0;
  long long violations = 0;
  // extremal premise-holding instance: largest lhs, for the report's numbers
  Rational best_lhs{0}, best_rhs{0};
  bool have_best = false;
  njson first_violation;  // params+witness of the first violating structure
};

void absorb(std::map<std::string, SlugTally>& tally, const LemmaReport& r) {
  SlugTally& t = tally[r.lemma];
  ++t.structures;
  if (r.verdict == Verdict::PremiseUnsatisfied) return;
  ++t.premise_held;
  if (r.verdict == Verdict::Violated) {
    ++t.violations;
    if (t.first_violation.is_null())
      t.first_violation = njson{{"params", r.params}, {"witness", r.witness}};
    return;
  }
  if (!r.lhs.empty()) {
    Rational lhs = Rational::parse(r.lhs), rhs = Rational::parse(r.rhs);
    if (!t.have_best || t.best_lhs < lhs) {
      t.best_lhs = lhs;
      t.best_rhs = rhs;
      t.have_best = true;
    }
  }
}

}  // namespace

std::vector<LemmaReport> sampled_structure_checks(const Graph& g, std::size_t samples_per_edge,
                                                  uint64_t seed, long long chi_budget) {
  std::map<std::string, SlugTally> tally;
  tally["kierstead_elementary"];
  tally["kierstead_p4"];
  tally["broom_elementary"];
  long long colorings = 0;
  long long edges_without_coloring = 0;

  for (int eid = 0; eid < g.size(); ++eid) {
    auto samples = sample_delta_colorings(g, eid, samples_per_edge, mix_seed(seed, "smpl", (uint64_t)eid, 0), chi_budget);
    if (samples.empty()) {
      ++edges_without_coloring;
      continue;
    }
    colorings += (long long)samples.size();
    for (const auto& c : samples) {
      for (const auto& path : maximal_kierstead_paths(g, eid, c))
        for (const auto& r : kierstead_check(g, c, path)) absorb(tally, r);
      for (const auto& broom : maximal_simple_brooms(g, eid, c)) absorb(tally, broom_check(g, c, broom));
    }
  }

  std::vector<LemmaReport> out;
  std::string g6 = to_graph6(g);
  for (auto& [slug, t] : tally) {
    LemmaReport r;
    r.lemma = slug;
    r.graph6 = g6;
    r.params = njson{{"mode", "sampled"},
                     {"samples_per_edge", samples_per_edge},
                     {"edges", g.size()},
                     {"colorings", colorings},
                     {"structures", t.structures},
                     {"premise_held", t.premise_held},
                     {"violations", t.violations}};
    if (edges_without_coloring > 0) r.params["edges_without_coloring"] = edges_without_coloring;
    if (t.violations > 0) {
      r.verdict = Verdict::Violated;
      r.witness = t.first_violation;
      r.lhs = Rational(t.violations).str();
      r.rhs = Rational(0).str();
    } else if (colorings == 0) {
      r.verdict = Verdict::Inconclusive;
      r.params["note"] = "no max-degree coloring found for any edge removal";
    } else if (t.premise_held == 0) {
      r.verdict = Verdict::PremiseUnsatisfied;
    } else {
      r.verdict = Verdict::Holds;
      if (t.have_best) {
        r.lhs = t.best_lhs.str();
        r.rhs = t.best_rhs.str();
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace critic
