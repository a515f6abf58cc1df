#ifndef CHROMATIC_CRITIC_H
#define CHROMATIC_CRITIC_H

/* C interface to the chromatic-critic core.  All functions are
 * thread-compatible: distinct handles may be used from distinct threads, and
 * the error message store is thread-local.  Strings returned through char**
 * out-parameters are heap-allocated and must be released with
 * cc_string_free(); they are never NULL on CC_OK. */

#ifdef __cplusplus
extern "C" {
#endif

/* Mirrors the core error codes one-to-one. */
typedef enum cc_status {
  CC_OK = 0,
  CC_OUT_OF_RANGE,
  CC_SELF_LOOP,
  CC_MALFORMED,
  CC_UNSUPPORTED_ORDER,
  CC_BAD_PARAM,
  CC_NOT_AN_EDGE,
  CC_UNKNOWN_EDGE,
  CC_NOT_BIPARTITE,
  CC_TOO_LARGE,
  CC_FEASIBILITY,
  CC_INVALID_PATH,
  CC_INVALID_BROOM,
  CC_BUDGET_EXHAUSTED,
  CC_IO_ERROR,
  CC_INTERNAL
} cc_status;

typedef struct cc_graph cc_graph;

const char* cc_version(void);

/* Stable identifier for a status value, e.g. "CC_BAD_PARAM". */
const char* cc_status_name(cc_status status);

/* Message from the most recent failing call on this thread; the empty string
 * after a successful call.  The pointer stays valid until the next call on
 * the same thread. */
const char* cc_last_error(void);

/* Parse one graph6 record. */
cc_status cc_graph_from_graph6(const char* text, cc_graph** out);

/* Build a named family instance, e.g. "petersen", "cycle:7",
 * "complete:5", "subdivided_complete:12", "random:10,1/2,42". */
cc_status cc_graph_generate(const char* family, cc_graph** out);

void cc_graph_free(cc_graph* g);

int cc_graph_order(const cc_graph* g);
int cc_graph_size(const cc_graph* g);
cc_status cc_graph_to_graph6(const cc_graph* g, char** out);

/* Exact chromatic index under a node budget.  On CC_OK, *chi is the value
 * and *exact is 1; when the budget ran out first, *chi is 0 and *exact is 0.
 * Pass budget <= 0 for the default. */
cc_status cc_chromatic_index(const cc_graph* g, long long budget, int* chi, int* exact);

/* Edge-criticality report as a JSON object (connected, max_degree,
 * chromatic_index, class_two, critical, complete). */
cc_status cc_criticality_json(const cc_graph* g, long long budget, char** json);

/* Full theorem pipeline for one graph; returns the staged JSON report. */
cc_status cc_pipeline_json(const cc_graph* g, long long chi_budget, long long ham_budget,
                           unsigned long long seed, char** json);

/* Run a batch command described by a JSON config:
 *   {"command": "verify"|"corpus"|"analyze"|"pipeline"|"closure",
 *    "input": path-or-family, "graph6": inline record, "nmax": N,
 *    "lemmas": [...], "q_grid": ["num/den", ...], "chi_budget": N,
 *    "ham_budget": N, "seed": N, "workers": N, "out": path,
 *    "skip_bad": bool, "samples": N, "stmt_visits": N}
 * Every field except "command" is optional.  On CC_OK, *report_json holds
 * the full report and *exit_code the process exit code the CLI would use
 * (0 = all HOLDS/PREMISE_UNSATISFIED, 2 = any VIOLATED, 3 = inconclusive
 * results remain). */
cc_status cc_run_json(const char* config_json, char** report_json, int* exit_code);

void cc_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* CHROMATIC_CRITIC_H */
