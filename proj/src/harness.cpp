#include "harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <set>
#include <thread>

#include "adjacency_lemmas.hpp"
#include "cover.hpp"
#include "critical.hpp"
#include "feasible.hpp"
#include "graph6.hpp"
#include "pipeline.hpp"
#include "sigma_bounds.hpp"
#include "walks.hpp"

namespace critic {

namespace {

const std::vector<std::pair<int, const char*>> kCatalog = {
    {1, "vizing_adjacency"},
    {2, "woodall_count"},
    {3, "woodall_neighbors"},
    {4, "fan_bound"},
    {5, "broom_bound"},
    {6, "kierstead_elementary"},
    {7, "kierstead_p4"},
    {8, "broom_elementary"},
    {9, "circumference_formula"},
    {12, "degree_sum_hamiltonicity"},
    {13, "closure_circumference"},
    {14, "double_cover"},
    {15, "small_critical_hamiltonian"},
    {0, "statements"},
};

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

struct InputGraph {
  std::string key;  // canonical graph6, the report key
  Graph graph;
  int index = 0;  // position in the input, tie-breaker for duplicates
};

std::vector<InputGraph> collect_inputs(const RunConfig& cfg, njson& warnings) {
  std::vector<InputGraph> out;
  if (!cfg.graph6.empty()) {
    Graph g = from_graph6(cfg.graph6);
    out.push_back({to_graph6(g), std::move(g), 0});
    return out;
  }
  if (!cfg.input.empty()) {
    std::ifstream probe(cfg.input);
    if (probe.good()) {
      probe.close();
      auto read = read_graph6_file(cfg.input, cfg.skip_bad);
      for (auto& w : read.warnings) warnings.push_back(w);
      out.reserve(read.graphs.size());
      for (auto& line : read.graphs)
        out.push_back({to_graph6(line.graph), std::move(line.graph), (int)out.size()});
      return out;
    }
    Graph g = generate(cfg.input);  // not a readable file: try a family spec
    out.push_back({to_graph6(g), std::move(g), 0});
    return out;
  }
  auto corpus = critical_corpus(cfg.nmax, cfg.chi_budget);
  if (!corpus.complete)
    warnings.push_back("criticality undecided for some enumerated graphs at the given budget");
  out.reserve(corpus.entries.size());
  for (auto& e : corpus.entries) out.push_back({e.graph6, std::move(e.graph), (int)out.size()});
  return out;
}

int decide_workers(const RunConfig& cfg) {
  if (cfg.workers > 0) return cfg.workers;
  if (const char* env = std::getenv("CC_WORKERS")) {
    int w = std::atoi(env);
    if (w > 0) return w;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? (int)hc : 1;
}

// Run one task body per input index on a small thread pool; the pool size
// never influences results, only wall time.
template <typename Fn>
void parallel_for(int count, int workers, Fn&& body) {
  if (count <= 0) return;
  workers = std::max(1, std::min(workers, count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::vector<std::string> errors((size_t)workers);
  std::vector<std::thread> pool;
  pool.reserve((size_t)workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= count || failed.load()) return;
        try {
          body(i);
        } catch (const std::exception& e) {
          errors[(size_t)w] = e.what();
          failed.store(true);
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failed.load()) {
    for (auto& e : errors)
      if (!e.empty()) fail(Err::Internal, "worker failed: " + e);
    fail(Err::Internal, "worker failed");
  }
}

LemmaReport gated_report(const std::string& lemma, const std::string& key, Verdict v,
                         const std::string& note) {
  LemmaReport r;
  r.lemma = lemma;
  r.graph6 = key;
  r.verdict = v;
  r.params["note"] = note;
  return r;
}

std::vector<LemmaReport> verify_graph(const InputGraph& in, const RunConfig& cfg,
                                      const std::set<std::string>& want) {
  const Graph& g = in.graph;
  std::vector<LemmaReport> rows;
  uint64_t gseed = mix_seed(cfg.seed, "graph", fnv1a(in.key));
  auto wanted = [&](const char* slug) { return want.count(slug) > 0; };

  bool need_cert = wanted("vizing_adjacency") || wanted("woodall_count") ||
                   wanted("woodall_neighbors") || wanted("kierstead_elementary") ||
                   wanted("kierstead_p4") || wanted("broom_elementary") ||
                   wanted("degree_sum_hamiltonicity") || wanted("small_critical_hamiltonian");
  CriticalityReport cert;
  if (need_cert) cert = edge_delta_criticality(g, cfg.chi_budget);

  if (wanted("vizing_adjacency") || wanted("woodall_count") || wanted("woodall_neighbors")) {
    for (auto& r : check_adjacency_lemmas(g, cfg.chi_budget, &cert))
      if (want.count(r.lemma)) rows.push_back(std::move(r));
  }

  std::vector<Rational> grid = cfg.q_grid.empty() ? default_q_grid(g.max_degree()) : cfg.q_grid;
  if (wanted("fan_bound"))
    for (const auto& q : grid) rows.push_back(check_sigma_bounds(g, q, BoundMode::FanBound));
  if (wanted("broom_bound"))
    for (const auto& q : grid) rows.push_back(check_sigma_bounds(g, q, BoundMode::BroomBound));

  bool want_structures =
      wanted("kierstead_elementary") || wanted("kierstead_p4") || wanted("broom_elementary");
  if (want_structures) {
    static const char* slugs[] = {"broom_elementary", "kierstead_elementary", "kierstead_p4"};
    if (!cert.complete) {
      for (const char* s : slugs)
        if (want.count(s))
          rows.push_back(
              gated_report(s, in.key, Verdict::Inconclusive, "criticality undecided within budget"));
    } else if (!cert.is_delta_critical) {
      for (const char* s : slugs)
        if (want.count(s))
          rows.push_back(gated_report(s, in.key, Verdict::PremiseUnsatisfied,
                                      "the graph is not edge-critical"));
    } else {
      for (auto& r : sampled_structure_checks(g, (size_t)std::max(cfg.samples, 1), gseed,
                                              cfg.chi_budget))
        if (want.count(r.lemma)) rows.push_back(std::move(r));
    }
  }

  if (wanted("circumference_formula")) rows.push_back(brandt_veldman_check(g, cfg.ham_budget));
  if (wanted("degree_sum_hamiltonicity"))
    rows.push_back(degree_sum_hamiltonicity_check(g, &cert, cfg.ham_budget));
  if (wanted("closure_circumference")) rows.push_back(closure_equivalence_check(g, cfg.ham_budget));
  if (wanted("double_cover")) rows.push_back(double_cover_check(g));
  if (wanted("small_critical_hamiltonian"))
    rows.push_back(small_critical_hamiltonian_check(g, &cert, cfg.ham_budget));

  if (wanted("statements")) {
    if (grid.empty()) {
      rows.push_back(gated_report("statements", in.key, Verdict::PremiseUnsatisfied,
                                  "the q grid is empty"));
    } else {
      StatementBudget budget;
      budget.target_visits = cfg.stmt_visits;
      budget.max_steps = cfg.stmt_visits * 100;
      budget.chi_budget = cfg.chi_budget;
      for (int eid = 0; eid < g.size(); ++eid)
        for (const auto& q : grid)
          rows.push_back(verify_coloring_statements(g, eid, q, budget, gseed));
    }
  }
  return rows;
}

njson config_echo(const RunConfig& c) {
  njson q = njson::array();
  for (const auto& r : c.q_grid) q.push_back(r.str());
  return njson{{"command", c.command},
               {"input", c.input},
               {"graph6", c.graph6},
               {"nmax", c.nmax},
               {"lemmas", c.lemmas},
               {"q_grid", q},
               {"chi_budget", c.chi_budget},
               {"ham_budget", c.ham_budget},
               {"seed", c.seed},
               {"skip_bad", c.skip_bad},
               {"samples", c.samples},
               {"stmt_visits", c.stmt_visits}};
}

struct VerdictTally {
  long long holds = 0, violated = 0, premise = 0, inconclusive = 0;

  void add(const std::string& name) {
    if (name == "HOLDS")
      ++holds;
    else if (name == "VIOLATED")
      ++violated;
    else if (name == "PREMISE_UNSATISFIED")
      ++premise;
    else
      ++inconclusive;
  }

  njson to_json() const {
    return njson{{"holds", holds},
                 {"violated", violated},
                 {"premise_unsatisfied", premise},
                 {"inconclusive", inconclusive}};
  }

  int exit_code() const { return violated > 0 ? 2 : inconclusive > 0 ? 3 : 0; }
};

std::string csv_escape(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_outputs(const RunConfig& cfg, const njson& report, const std::string& csv) {
  if (cfg.out_path.empty()) return;
  {
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) fail(Err::IoError, "cannot write " + cfg.out_path);
    f << report.dump(2) << '\n';
  }
  std::string csv_path = cfg.out_path;
  auto dot = csv_path.find_last_of('.');
  auto slash = csv_path.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    csv_path += ".csv";
  else
    csv_path = csv_path.substr(0, dot) + ".csv";
  std::ofstream f(csv_path, std::ios::binary);
  if (!f) fail(Err::IoError, "cannot write " + csv_path);
  f << csv;
}

// Order the per-graph blocks by canonical key; duplicate inputs keep their
// original relative order.
std::vector<int> sorted_order(const std::vector<InputGraph>& graphs) {
  std::vector<int> order((size_t)graphs.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (graphs[(size_t)a].key != graphs[(size_t)b].key)
      return graphs[(size_t)a].key < graphs[(size_t)b].key;
    return graphs[(size_t)a].index < graphs[(size_t)b].index;
  });
  return order;
}

int run_verify(const RunConfig& cfg, njson* report) {
  std::set<std::string> want;
  if (cfg.lemmas.empty()) {
    for (auto& [id, slug] : kCatalog) want.insert(slug);
  } else {
    for (auto& token : cfg.lemmas) want.insert(normalize_lemma(token));
  }
  njson warnings = njson::array();
  auto graphs = collect_inputs(cfg, warnings);
  std::vector<std::vector<LemmaReport>> rows((size_t)graphs.size());
  parallel_for((int)graphs.size(), decide_workers(cfg),
               [&](int i) { rows[(size_t)i] = verify_graph(graphs[(size_t)i], cfg, want); });

  VerdictTally tally;
  njson blocks = njson::array();
  std::string csv = "graph6,n,delta,lemma,params,verdict,lhs,rhs\n";
  long long total_rows = 0;
  for (int i : sorted_order(graphs)) {
    const auto& in = graphs[(size_t)i];
    njson block{{"graph6", in.key},
                {"order", in.graph.order()},
                {"max_degree", in.graph.max_degree()}};
    njson list = njson::array();
    for (const auto& r : rows[(size_t)i]) {
      list.push_back(r.to_json());
      tally.add(verdict_name(r.verdict));
      ++total_rows;
      csv += in.key + "," + std::to_string(in.graph.order()) + "," +
             std::to_string(in.graph.max_degree()) + "," + r.lemma + "," +
             csv_escape(r.params.dump()) + "," + verdict_name(r.verdict) + "," + r.lhs + "," +
             r.rhs + "\n";
    }
    block["reports"] = std::move(list);
    blocks.push_back(std::move(block));
  }
  njson out{{"command", "verify"}, {"config", config_echo(cfg)}};
  if (!warnings.empty()) out["warnings"] = warnings;
  out["graphs"] = std::move(blocks);
  njson summary = tally.to_json();
  summary["graphs"] = graphs.size();
  summary["reports"] = total_rows;
  out["summary"] = std::move(summary);
  if (report) *report = out;
  write_outputs(cfg, out, csv);
  return tally.exit_code();
}

int run_pipeline(const RunConfig& cfg, njson* report) {
  njson warnings = njson::array();
  auto graphs = collect_inputs(cfg, warnings);
  std::vector<njson> rows((size_t)graphs.size());
  parallel_for((int)graphs.size(), decide_workers(cfg), [&](int i) {
    PipelineOptions opts;
    opts.chi_budget = cfg.chi_budget;
    opts.ham_budget = cfg.ham_budget;
    opts.seed = mix_seed(cfg.seed, "graph", fnv1a(graphs[(size_t)i].key));
    rows[(size_t)i] = theorem_pipeline(graphs[(size_t)i].graph, opts);
  });

  VerdictTally tally;
  njson list = njson::array();
  std::string csv = "graph6,n,delta,lemma,params,verdict,lhs,rhs\n";
  for (int i : sorted_order(graphs)) {
    const njson& p = rows[(size_t)i];
    for (const auto& stage : p.at("stages")) {
      tally.add(stage.at("verdict").get<std::string>());
      csv += graphs[(size_t)i].key + "," + std::to_string(graphs[(size_t)i].graph.order()) + "," +
             std::to_string(graphs[(size_t)i].graph.max_degree()) + "," +
             stage.at("stage").get<std::string>() + "," + csv_escape(stage.at("data").dump()) +
             "," + stage.at("verdict").get<std::string>() + ",,\n";
    }
    list.push_back(p);
  }
  njson out{{"command", "pipeline"}, {"config", config_echo(cfg)}};
  if (!warnings.empty()) out["warnings"] = warnings;
  out["pipelines"] = std::move(list);
  njson summary = tally.to_json();
  summary["graphs"] = graphs.size();
  out["summary"] = std::move(summary);
  if (report) *report = out;
  write_outputs(cfg, out, csv);
  return tally.exit_code();
}

int run_corpus(const RunConfig& cfg, njson* report) {
  auto corpus = critical_corpus(cfg.nmax, cfg.chi_budget);
  njson entries = njson::array();
  for (const auto& e : corpus.entries)
    entries.push_back(njson{{"graph6", e.graph6},
                            {"order", e.graph.order()},
                            {"max_degree", e.delta},
                            {"chromatic_index", e.chi}});
  njson out{{"command", "corpus"},
            {"config", config_echo(cfg)},
            {"entries", std::move(entries)},
            {"complete", corpus.complete},
            {"graphs_examined", corpus.graphs_examined}};
  if (report) *report = out;
  write_outputs(cfg, out, "graph6,n,delta,lemma,params,verdict,lhs,rhs\n");
  return corpus.complete ? 0 : 3;
}

int run_analyze(const RunConfig& cfg, njson* report) {
  njson warnings = njson::array();
  auto graphs = collect_inputs(cfg, warnings);
  if (graphs.empty()) fail(Err::BadParam, "analyze needs at least one graph");
  njson list = njson::array();
  int code = 0;
  for (int i : sorted_order(graphs)) {
    const auto& in = graphs[(size_t)i];
    CriticalityReport crit = edge_delta_criticality(in.graph, cfg.chi_budget);
    njson entry{{"graph6", in.key},
                {"order", in.graph.order()},
                {"size", in.graph.size()},
                {"max_degree", in.graph.max_degree()},
                {"min_degree", in.graph.min_degree()},
                {"connected", crit.connected}};
    if (crit.chi > 0) {
      entry["chromatic_index"] = crit.chi;
      entry["class_two"] = crit.class_two;
    } else {
      entry["chromatic_index"] = nullptr;
    }
    entry["critical"] = crit.is_delta_critical;
    entry["complete"] = crit.complete;
    if (!crit.complete) code = 3;
    list.push_back(std::move(entry));
  }
  njson out{{"command", "analyze"}, {"config", config_echo(cfg)}};
  if (!warnings.empty()) out["warnings"] = warnings;
  out["graphs"] = std::move(list);
  if (report) *report = out;
  write_outputs(cfg, out, "graph6,n,delta,lemma,params,verdict,lhs,rhs\n");
  return code;
}

int run_closure(const RunConfig& cfg, njson* report) {
  njson warnings = njson::array();
  auto graphs = collect_inputs(cfg, warnings);
  if (graphs.empty()) fail(Err::BadParam, "closure needs at least one graph");
  njson list = njson::array();
  for (int i : sorted_order(graphs)) {
    const auto& in = graphs[(size_t)i];
    auto trace = bondy_chvatal_closure(in.graph);
    njson added = njson::array();
    for (const auto& step : trace.added)
      added.push_back(njson{{"u", step.u}, {"v", step.v}, {"degree_sum", step.degree_sum}});
    list.push_back(njson{{"graph6", in.key},
                         {"closure_graph6", to_graph6(trace.closure)},
                         {"edges_added", std::move(added)}});
  }
  njson out{{"command", "closure"}, {"config", config_echo(cfg)}};
  if (!warnings.empty()) out["warnings"] = warnings;
  out["closures"] = std::move(list);
  if (report) *report = out;
  write_outputs(cfg, out, "graph6,n,delta,lemma,params,verdict,lhs,rhs\n");
  return 0;
}

}  // namespace

std::string normalize_lemma(const std::string& token) {
  for (auto& [id, slug] : kCatalog) {
    if (token == slug) return slug;
    if (id != 0 && token == std::to_string(id)) return slug;
  }
  fail(Err::BadParam, "unknown lemma selector: " + token);
}

const std::vector<std::string>& lemma_catalog() {
  static const std::vector<std::string> slugs = [] {
    std::vector<std::string> v;
    for (auto& [id, slug] : kCatalog) v.push_back(slug);
    return v;
  }();
  return slugs;
}

std::vector<Rational> default_q_grid(int delta) {
  std::vector<Rational> qs;
  for (int q = 1; q <= delta - 10; ++q) qs.push_back(Rational(q));
  if (delta - 18 >= 1) qs.push_back(Rational(delta - 18));
  if (delta >= 1) qs.push_back(Rational(68 * delta, 81));
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  return qs;
}

RunConfig config_from_json(const njson& j) {
  RunConfig c;
  if (!j.is_object()) fail(Err::Malformed, "config must be a JSON object");
  c.command = j.value("command", std::string());
  c.input = j.value("input", std::string());
  c.graph6 = j.value("graph6", std::string());
  c.nmax = j.value("nmax", c.nmax);
  if (j.contains("lemmas"))
    for (const auto& t : j.at("lemmas")) c.lemmas.push_back(t.get<std::string>());
  if (j.contains("q_grid"))
    for (const auto& t : j.at("q_grid")) c.q_grid.push_back(Rational::parse(t.get<std::string>()));
  c.chi_budget = j.value("chi_budget", c.chi_budget);
  c.ham_budget = j.value("ham_budget", c.ham_budget);
  c.seed = j.value("seed", c.seed);
  c.workers = j.value("workers", c.workers);
  c.out_path = j.value("out", c.out_path);
  c.skip_bad = j.value("skip_bad", c.skip_bad);
  c.samples = j.value("samples", c.samples);
  c.stmt_visits = j.value("stmt_visits", c.stmt_visits);
  return c;
}

int run(const RunConfig& cfg, njson* report) {
  if (cfg.nmax < 1 || cfg.nmax > 8)
    fail(Err::BadParam, "nmax must be between 1 and 8");
  if (cfg.chi_budget <= 0 || cfg.ham_budget <= 0) fail(Err::BadParam, "budgets must be positive");
  for (const auto& q : cfg.q_grid)
    if (q <= Rational(0)) fail(Err::BadParam, "q grid entries must be positive");
  if (cfg.command == "verify") return run_verify(cfg, report);
  if (cfg.command == "pipeline") return run_pipeline(cfg, report);
  if (cfg.command == "corpus") return run_corpus(cfg, report);
  if (cfg.command == "analyze") return run_analyze(cfg, report);
  if (cfg.command == "closure") return run_closure(cfg, report);
  fail(Err::BadParam, "unknown command: " + cfg.command);
}

}  // namespace critic
