#include "chromatic_critic.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "critical.hpp"
#include "errors.hpp"
#include "exact_chromatic.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "harness.hpp"
#include "pipeline.hpp"

struct cc_graph {
  critic::Graph g;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
cc_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    fn();
    return CC_OK;
  } catch (const critic::CriticError& e) {
    g_last_error = e.what();
    return static_cast<cc_status>(static_cast<int>(e.code()));
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return CC_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CC_INTERNAL;
  }
}

cc_status require(bool ok, const char* what) {
  if (ok) return CC_OK;
  g_last_error = what;
  return CC_BAD_PARAM;
}

}  // namespace

extern "C" {

const char* cc_version(void) { return "1.0.0"; }

const char* cc_status_name(cc_status status) {
  switch (status) {
    case CC_OK: return "CC_OK";
    case CC_OUT_OF_RANGE: return "CC_OUT_OF_RANGE";
    case CC_SELF_LOOP: return "CC_SELF_LOOP";
    case CC_MALFORMED: return "CC_MALFORMED";
    case CC_UNSUPPORTED_ORDER: return "CC_UNSUPPORTED_ORDER";
    case CC_BAD_PARAM: return "CC_BAD_PARAM";
    case CC_NOT_AN_EDGE: return "CC_NOT_AN_EDGE";
    case CC_UNKNOWN_EDGE: return "CC_UNKNOWN_EDGE";
    case CC_NOT_BIPARTITE: return "CC_NOT_BIPARTITE";
    case CC_TOO_LARGE: return "CC_TOO_LARGE";
    case CC_FEASIBILITY: return "CC_FEASIBILITY";
    case CC_INVALID_PATH: return "CC_INVALID_PATH";
    case CC_INVALID_BROOM: return "CC_INVALID_BROOM";
    case CC_BUDGET_EXHAUSTED: return "CC_BUDGET_EXHAUSTED";
    case CC_IO_ERROR: return "CC_IO_ERROR";
    case CC_INTERNAL: return "CC_INTERNAL";
  }
  return "CC_INTERNAL";
}

const char* cc_last_error(void) { return g_last_error.c_str(); }

cc_status cc_graph_from_graph6(const char* text, cc_graph** out) {
  if (cc_status s = require(text && out, "text and out must be non-null")) return s;
  return guarded([&] {
    auto* h = new cc_graph{critic::from_graph6(text)};
    *out = h;
  });
}

cc_status cc_graph_generate(const char* family, cc_graph** out) {
  if (cc_status s = require(family && out, "family and out must be non-null")) return s;
  return guarded([&] {
    auto* h = new cc_graph{critic::generate(family)};
    *out = h;
  });
}

void cc_graph_free(cc_graph* g) { delete g; }

int cc_graph_order(const cc_graph* g) { return g ? g->g.order() : -1; }

int cc_graph_size(const cc_graph* g) { return g ? g->g.size() : -1; }

cc_status cc_graph_to_graph6(const cc_graph* g, char** out) {
  if (cc_status s = require(g && out, "graph and out must be non-null")) return s;
  return guarded([&] { *out = dup_string(critic::to_graph6(g->g)); });
}

cc_status cc_chromatic_index(const cc_graph* g, long long budget, int* chi, int* exact) {
  if (cc_status s = require(g && chi && exact, "graph, chi and exact must be non-null")) return s;
  return guarded([&] {
    auto r = critic::chromatic_index(g->g, budget > 0 ? budget : critic::kDefaultChiBudget);
    *exact = r.status == critic::ChromaticIndex::Exact ? 1 : 0;
    *chi = *exact ? r.value : 0;
  });
}

cc_status cc_criticality_json(const cc_graph* g, long long budget, char** json) {
  if (cc_status s = require(g && json, "graph and json must be non-null")) return s;
  return guarded([&] {
    auto r = critic::edge_delta_criticality(g->g,
                                            budget > 0 ? budget : critic::kDefaultChiBudget);
    critic::njson j{{"connected", r.connected},
                    {"max_degree", r.delta},
                    {"chromatic_index", r.chi > 0 ? critic::njson(r.chi) : critic::njson()},
                    {"class_two", r.class_two},
                    {"critical", r.is_delta_critical},
                    {"complete", r.complete}};
    *json = dup_string(j.dump(2));
  });
}

cc_status cc_pipeline_json(const cc_graph* g, long long chi_budget, long long ham_budget,
                           unsigned long long seed, char** json) {
  if (cc_status s = require(g && json, "graph and json must be non-null")) return s;
  return guarded([&] {
    critic::PipelineOptions opts;
    if (chi_budget > 0) opts.chi_budget = chi_budget;
    if (ham_budget > 0) opts.ham_budget = ham_budget;
    opts.seed = seed;
    *json = dup_string(critic::theorem_pipeline(g->g, opts).dump(2));
  });
}

cc_status cc_run_json(const char* config_json, char** report_json, int* exit_code) {
  if (cc_status s = require(config_json && report_json && exit_code,
                            "config, report and exit_code must be non-null"))
    return s;
  return guarded([&] {
    critic::njson parsed = critic::njson::parse(config_json, nullptr, false);
    if (parsed.is_discarded()) critic::fail(critic::Err::Malformed, "config is not valid JSON");
    critic::RunConfig cfg = critic::config_from_json(parsed);
    critic::njson report;
    *exit_code = critic::run(cfg, &report);
    *report_json = dup_string(report.dump(2));
  });
}

void cc_string_free(char* s) { std::free(s); }

}  // extern "C"
