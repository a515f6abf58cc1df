#include "pipeline.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "critical.hpp"
#include "graph6.hpp"

namespace critic {

namespace {

njson stage_entry(const char* name, Verdict v, njson data) {
  return njson{{"stage", name}, {"verdict", verdict_name(v)}, {"data", std::move(data)}};
}

// verdict for a stage whose own evaluation only makes sense under the
// theorem premise and a criticality certificate
Verdict gated(Verdict premise, Verdict criticality, Verdict own) {
  if (premise != Verdict::Holds || criticality == Verdict::PremiseUnsatisfied)
    return Verdict::PremiseUnsatisfied;
  if (criticality == Verdict::Inconclusive) return Verdict::Inconclusive;
  return own;
}

int count_at_least(const Graph& g, const Rational& q) {
  int c = 0;
  for (int v = 0; v < g.order(); ++v)
    if (q <= Rational(g.degree(v))) ++c;
  return c;
}

}  // namespace

njson theorem_pipeline(const Graph& g, const PipelineOptions& opts) {
  int n = g.order();
  int delta = g.max_degree();
  njson stages = njson::array();

  // premise: max degree at least 2n/3 + 12, equivalently n <= (3/2)(Δ-12)
  Rational premise_bound = Rational(2 * n, 3) + Rational(12);
  Rational order_bound = Rational(3, 2) * (Rational(delta) - Rational(12));
  bool premise_ok = premise_bound <= Rational(delta);
  Verdict premise_v = premise_ok ? Verdict::Holds : Verdict::PremiseUnsatisfied;
  stages.push_back(stage_entry(
      "theorem_premise", premise_v,
      njson{{"max_degree", delta},
            {"required", premise_bound.str()},
            {"order", n},
            {"order_bound", order_bound.str()},
            {"order_within_bound", Rational(n) <= order_bound}}));

  // criticality certificate
  CriticalityReport crit = edge_delta_criticality(g, opts.chi_budget);
  Verdict crit_v = !crit.complete       ? Verdict::Inconclusive
                   : crit.is_delta_critical ? Verdict::Holds
                                            : Verdict::PremiseUnsatisfied;
  {
    njson data{{"connected", crit.connected}, {"complete", crit.complete}};
    if (crit.chi > 0) data["chromatic_index"] = crit.chi;
    data["class_two"] = crit.class_two;
    data["critical"] = crit.is_delta_critical;
    stages.push_back(stage_entry("criticality", crit_v, data));
  }

  Rational half(delta, 2);
  int min_deg = g.min_degree();
  bool low_branch = Rational(min_deg) < half;

  // degree threshold counts
  {
    Rational q_a(delta - 18);
    Rational q_c = Rational(68 * delta, 81);
    int count_a = count_at_least(g, q_a);
    int count_c = count_at_least(g, q_c);
    Rational bound_a = Rational(107 * delta, 162);
    Rational half_order(n, 2);
    bool ok_a = bound_a <= Rational(count_a);
    bool small_delta = delta <= 100;
    bool ok_bc = small_delta ? half_order <= Rational(count_a) : half_order <= Rational(count_c);
    njson data{{"min_degree_branch", low_branch ? "below_half" : "at_least_half"},
               {"near_max_threshold", q_a.str()},
               {"near_max_count", count_a},
               {"near_max_required", bound_a.str()},
               {"half_order", half_order.str()}};
    if (small_delta) {
      data["half_order_count"] = count_a;
    } else {
      data["scaled_threshold"] = q_c.str();
      data["half_order_count"] = count_c;
    }
    Verdict own = ok_a && ok_bc ? Verdict::Holds : Verdict::Violated;
    data["near_max_ok"] = ok_a;
    data["half_order_ok"] = ok_bc;
    stages.push_back(stage_entry("degree_thresholds", gated(premise_v, crit_v, own), data));
  }

  // high-degree vertices form a clique after closure
  {
    auto trace = bondy_chvatal_closure(g);
    std::vector<int> high;
    for (int v = 0; v < n; ++v)
      if (half <= Rational(g.degree(v))) high.push_back(v);
    int missing_u = -1, missing_v = -1;
    for (size_t i = 0; i < high.size() && missing_u < 0; ++i)
      for (size_t j = i + 1; j < high.size(); ++j)
        if (!trace.closure.adjacent(high[i], high[j])) {
          missing_u = high[i];
          missing_v = high[j];
          break;
        }
    njson data{{"high_degree_count", high.size()}, {"closure_edges_added", trace.added.size()}};
    Verdict own = Verdict::Holds;
    if (missing_u >= 0) {
      own = Verdict::Violated;
      data["nonadjacent_pair"] = njson::array({missing_u, missing_v});
    }
    stages.push_back(stage_entry("closure_clique", gated(premise_v, crit_v, own), data));
  }

  // neighborhood expansion of the low-degree vertices
  {
    std::vector<int> domain;
    for (int v = 0; v < n; ++v)
      if (Rational(g.degree(v)) < half) domain.push_back(v);
    njson data{{"domain_size", domain.size()}};
    Verdict own = Verdict::Holds;
    auto neighborhood_size = [&](const std::vector<int>& X) {
      std::vector<char> seen((size_t)n, 0);
      int c = 0;
      for (int x : X)
        for (int w : g.neighbors(x))
          if (!seen[w]) {
            seen[w] = 1;
            ++c;
          }
      return c;
    };
    if (domain.empty()) {
      data["note"] = "no low-degree vertices; vacuous";
    } else if (domain.size() <= 20) {
      data["mode"] = "exhaustive";
      int worst_slack = 0;
      njson worst;
      for (uint32_t S = 1; S < (1u << domain.size()); ++S) {
        std::vector<int> X;
        for (uint32_t t = S; t;) {
          X.push_back(domain[__builtin_ctz(t)]);
          t &= t - 1;
        }
        int ns = neighborhood_size(X);
        int slack = ns - 2 * (int)X.size();
        if (worst.is_null() || slack < worst_slack) {
          worst_slack = slack;
          worst = njson{{"set", X}, {"neighborhood", ns}, {"required", 2 * (int)X.size()}};
        }
      }
      data["worst"] = worst;
      if (worst_slack < 0) own = Verdict::Violated;
    } else {
      data["mode"] = "sampled";
      int samples = std::max(opts.expansion_samples, 1);
      data["samples"] = samples;
      data["coverage"] = std::to_string(samples) + "/2^" + std::to_string(domain.size());
      uint64_t state = mix_seed(opts.seed, "expand", (uint64_t)n, (uint64_t)g.size());
      int worst_slack = 0;
      njson worst;
      for (int s = 0; s < samples; ++s) {
        std::vector<int> X;
        for (int v : domain)
          if (uniform_below(state, 2)) X.push_back(v);
        if (X.empty()) X.push_back(domain[(size_t)uniform_below(state, domain.size())]);
        int ns = neighborhood_size(X);
        int slack = ns - 2 * (int)X.size();
        if (worst.is_null() || slack < worst_slack) {
          worst_slack = slack;
          worst = njson{{"set", X}, {"neighborhood", ns}, {"required", 2 * (int)X.size()}};
        }
      }
      data["worst"] = worst;
      if (worst_slack < 0) own = Verdict::Violated;
    }
    stages.push_back(stage_entry("neighborhood_expansion", gated(premise_v, crit_v, own), data));
  }

  // minimum degree at least half the maximum
  {
    njson data{{"min_degree", min_deg}, {"required", half.str()}};
    Verdict own = half <= Rational(min_deg) ? Verdict::Holds : Verdict::Violated;
    stages.push_back(stage_entry("min_degree", gated(premise_v, crit_v, own), data));
  }

  // the conclusion: a spanning cycle, directly or through the closure
  {
    njson data;
    Verdict own;
    auto direct = hamiltonian_cycle(g, opts.ham_budget);
    data["search_nodes"] = direct.nodes;
    if (direct.status == CycleSearch::Found) {
      own = Verdict::Holds;
      data["cycle"] = direct.cycle;
    } else if (direct.status == CycleSearch::None) {
      own = Verdict::Violated;
      data["note"] = "no spanning cycle exists";
    } else {
      auto trace = bondy_chvatal_closure(g);
      data["decided_via"] = "closure";
      data["closure_edges_added"] = trace.added.size();
      auto via = hamiltonian_cycle(trace.closure, opts.ham_budget);
      data["closure_search_nodes"] = via.nodes;
      if (via.status == CycleSearch::Found) {
        own = Verdict::Holds;
        data["closure_cycle"] = via.cycle;
      } else if (via.status == CycleSearch::None) {
        own = Verdict::Violated;
        data["note"] = "the closure has no spanning cycle";
      } else {
        own = Verdict::Inconclusive;
        data.erase("decided_via");
        data["note"] = "spanning-cycle search ran out of budget on both sides";
      }
    }
    stages.push_back(stage_entry("hamiltonian", gated(premise_v, crit_v, own), data));
  }

  return njson{{"graph6", to_graph6(g)}, {"order", n}, {"max_degree", delta}, {"stages", stages}};
}

}  // namespace critic
