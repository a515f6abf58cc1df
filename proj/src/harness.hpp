#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "exact_chromatic.hpp"
#include "hamilton.hpp"
#include "rational.hpp"
#include "report.hpp"

namespace critic {

// Everything a batch run needs; seed and budgets pin all randomized and
// bounded behaviour, so identical configs over identical inputs reproduce
// reports byte for byte.
struct RunConfig {
  std::string command;               // corpus | verify | analyze | pipeline | closure
  std::string input;                 // graph6 file path, or a family spec like "petersen"
  std::string graph6;                // single inline graph
  int nmax = 7;                      // corpus order cap when no input is given
  std::vector<std::string> lemmas;   // catalog selection; empty = whole catalog
  std::vector<Rational> q_grid;      // empty = per-graph default grid
  long long chi_budget = kDefaultChiBudget;
  long long ham_budget = kDefaultHamBudget;
  uint64_t seed = 0;
  int workers = 0;                   // 0 = CC_WORKERS env, then hardware count
  std::string out_path;              // empty = no files, report via *report only
  bool skip_bad = false;             // tolerate malformed corpus lines
  int samples = 100;                 // sampled colorings per edge (structure sweeps)
  uint64_t stmt_visits = 1200;       // feasible-coloring visit target per item
};

// Canonical slug for a --lemmas token (numeric id or slug); throws BadParam
// on unknown names.
std::string normalize_lemma(const std::string& token);

// The full catalog in dispatch order.
const std::vector<std::string>& lemma_catalog();

// Default q grid for a graph of the given maximum degree.
std::vector<Rational> default_q_grid(int delta);

RunConfig config_from_json(const njson& j);

// Executes the configured command.  The JSON report lands in *report when
// non-null; a non-empty out_path also writes the JSON and a CSV sibling.
// Exit code: 0 when every verdict is HOLDS or PREMISE_UNSATISFIED, 2 when any
// is VIOLATED, 3 when INCONCLUSIVE outcomes are the worst; IO and usage
// problems throw CriticError (mapped to exit 1 by the front ends).
int run(const RunConfig& config, njson* report = nullptr);

}  // namespace critic
