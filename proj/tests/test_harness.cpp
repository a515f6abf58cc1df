#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "graph.hpp"
#include "graph6.hpp"
#include "harness.hpp"

using namespace critic;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  REQUIRE(f.good());
  f << text;
}

}  // namespace

TEST_CASE("lemma selectors accept ids and slugs") {
  CHECK(normalize_lemma("1") == "vizing_adjacency");
  CHECK(normalize_lemma("9") == "circumference_formula");
  CHECK(normalize_lemma("15") == "small_critical_hamiltonian");
  CHECK(normalize_lemma("double_cover") == "double_cover");
  CHECK(normalize_lemma("statements") == "statements");
  CHECK_THROWS_AS(normalize_lemma("0"), CriticError);   // statements has no numeric id
  CHECK_THROWS_AS(normalize_lemma("16"), CriticError);
  CHECK_THROWS_AS(normalize_lemma("bogus"), CriticError);
  CHECK_THROWS_AS(normalize_lemma(""), CriticError);
}

TEST_CASE("the catalog is stable and ordered") {
  const auto& cat = lemma_catalog();
  REQUIRE(cat.size() == 14);
  CHECK(cat.front() == "vizing_adjacency");
  CHECK(cat[8] == "circumference_formula");
  CHECK(cat.back() == "statements");
}

TEST_CASE("default q grids track the maximum degree") {
  auto g30 = default_q_grid(30);
  REQUIRE(g30.size() == 21);  // 1..20 plus the scaled threshold; 30-18 collides
  CHECK(g30.front() == Rational(1));
  CHECK(g30[19] == Rational(20));
  CHECK(g30.back() == Rational(680, 27));

  auto g12 = default_q_grid(12);
  REQUIRE(g12.size() == 3);
  CHECK(g12[0] == Rational(1));
  CHECK(g12[1] == Rational(2));
  CHECK(g12[2] == Rational(272, 27));

  auto g2 = default_q_grid(2);
  REQUIRE(g2.size() == 1);
  CHECK(g2[0] == Rational(136, 81));

  CHECK(default_q_grid(0).empty());
}

TEST_CASE("configs round-trip through JSON") {
  njson j{{"command", "verify"},
          {"input", "corpus.g6"},
          {"graph6", "Bw"},
          {"nmax", 5},
          {"lemmas", njson::array({"1", "statements"})},
          {"q_grid", njson::array({"1", "3/2"})},
          {"chi_budget", 1234},
          {"ham_budget", 77},
          {"seed", 42},
          {"workers", 3},
          {"out", "rep.json"},
          {"skip_bad", true},
          {"samples", 9},
          {"stmt_visits", 321}};
  RunConfig c = config_from_json(j);
  CHECK(c.command == "verify");
  CHECK(c.input == "corpus.g6");
  CHECK(c.graph6 == "Bw");
  CHECK(c.nmax == 5);
  REQUIRE(c.lemmas.size() == 2);
  CHECK(c.lemmas[1] == "statements");
  REQUIRE(c.q_grid.size() == 2);
  CHECK(c.q_grid[1] == Rational(3, 2));
  CHECK(c.chi_budget == 1234);
  CHECK(c.ham_budget == 77);
  CHECK(c.seed == 42);
  CHECK(c.workers == 3);
  CHECK(c.out_path == "rep.json");
  CHECK(c.skip_bad == true);
  CHECK(c.samples == 9);
  CHECK(c.stmt_visits == 321);

  RunConfig d = config_from_json(njson::object());
  CHECK(d.command.empty());
  CHECK(d.nmax == 7);
  CHECK(d.chi_budget == kDefaultChiBudget);
  CHECK(d.ham_budget == kDefaultHamBudget);
  CHECK(d.samples == 100);
  CHECK(d.stmt_visits == 1200);

  CHECK_THROWS_AS(config_from_json(njson::array()), CriticError);
}

TEST_CASE("run rejects unusable configs up front") {
  auto code_of = [](RunConfig c) {
    try {
      run(c);
    } catch (const CriticError& e) {
      return e.code();
    }
    return Err::Ok;
  };
  RunConfig base;
  base.command = "verify";
  base.graph6 = "Bw";

  RunConfig c = base;
  c.command = "paint";
  CHECK(code_of(c) == Err::BadParam);

  c = base;
  c.nmax = 0;
  CHECK(code_of(c) == Err::BadParam);
  c.nmax = 9;
  CHECK(code_of(c) == Err::BadParam);

  c = base;
  c.chi_budget = 0;
  CHECK(code_of(c) == Err::BadParam);

  c = base;
  c.ham_budget = -5;
  CHECK(code_of(c) == Err::BadParam);

  c = base;
  c.q_grid = {Rational(0)};
  CHECK(code_of(c) == Err::BadParam);
}

TEST_CASE("verify on the triangle walks the whole catalog") {
  RunConfig c;
  c.command = "verify";
  c.graph6 = "Bw";
  c.workers = 1;
  njson rep;
  CHECK(run(c, &rep) == 0);

  CHECK(rep["command"] == "verify");
  CHECK(rep["summary"]["holds"] == 7);
  CHECK(rep["summary"]["violated"] == 0);
  CHECK(rep["summary"]["premise_unsatisfied"] == 9);
  CHECK(rep["summary"]["inconclusive"] == 0);
  CHECK(rep["summary"]["graphs"] == 1);
  CHECK(rep["summary"]["reports"] == 16);

  // the echoed config never leaks run-shaping knobs that don't affect results
  CHECK_FALSE(rep["config"].contains("workers"));
  CHECK_FALSE(rep["config"].contains("out"));
  CHECK(rep["config"]["nmax"] == 7);

  REQUIRE(rep["graphs"].size() == 1);
  auto& block = rep["graphs"][0];
  CHECK(block["graph6"] == "Bw");
  CHECK(block["order"] == 3);
  CHECK(block["max_degree"] == 2);
  auto& rows = block["reports"];
  REQUIRE(rows.size() == 16);
  CHECK(rows[0]["lemma"] == "vizing_adjacency");
  CHECK(rows[0]["verdict"] == "HOLDS");
  CHECK(rows[0]["lhs"] == "1/1");
  // each edge gets a statements row; at max degree 2 the q gate never opens
  int statements = 0;
  for (auto& r : rows)
    if (r["lemma"] == "statements") {
      ++statements;
      CHECK(r["verdict"] == "PREMISE_UNSATISFIED");
    }
  CHECK(statements == 3);
}

TEST_CASE("a violated lemma drives the exit code to 2") {
  RunConfig c;
  c.command = "verify";
  c.graph6 = "D~?";  // a clique with a stranded vertex defeats the cycle bound
  c.lemmas = {"9"};
  njson rep;
  CHECK(run(c, &rep) == 2);
  auto& rows = rep["graphs"][0]["reports"];
  REQUIRE(rows.size() == 1);
  CHECK(rows[0]["lemma"] == "circumference_formula");
  CHECK(rows[0]["verdict"] == "VIOLATED");
  CHECK(rows[0]["lhs"] == "4/1");
  CHECK(rows[0]["rhs"] == "3/1");
}

TEST_CASE("corpus starvation is inconclusive, not wrong") {
  RunConfig c;
  c.command = "corpus";
  c.nmax = 4;
  c.chi_budget = 1;
  njson rep;
  CHECK(run(c, &rep) == 3);
  CHECK(rep["complete"] == false);
  CHECK(rep["entries"].empty());

  RunConfig ok;
  ok.command = "corpus";
  ok.nmax = 5;
  njson full;
  CHECK(run(ok, &full) == 0);
  CHECK(full["complete"] == true);
  REQUIRE(full["entries"].size() == 4);
  CHECK(full["entries"][0]["graph6"] == "Bw");
  std::vector<int> orders;
  for (auto& e : full["entries"]) orders.push_back(e["order"].get<int>());
  CHECK(orders == std::vector<int>{3, 5, 5, 5});
  CHECK(full["graphs_examined"].get<long long>() > 0);
}

TEST_CASE("analyze resolves family specs") {
  RunConfig c;
  c.command = "analyze";
  c.input = "petersen";
  njson rep;
  CHECK(run(c, &rep) == 0);
  REQUIRE(rep["graphs"].size() == 1);
  auto& e = rep["graphs"][0];
  CHECK(e["graph6"] == "IheA@GUAo");
  CHECK(e["order"] == 10);
  CHECK(e["size"] == 15);
  CHECK(e["max_degree"] == 3);
  CHECK(e["min_degree"] == 3);
  CHECK(e["connected"] == true);
  CHECK(e["chromatic_index"] == 4);
  CHECK(e["class_two"] == true);
  CHECK(e["critical"] == false);
  CHECK(e["complete"] == true);

  RunConfig bad = c;
  bad.input = "no_such_family";
  CHECK_THROWS_AS(run(bad), CriticError);
}

TEST_CASE("worker count never changes the report bytes") {
  RunConfig c;
  c.command = "verify";
  c.nmax = 5;
  c.samples = 5;
  c.stmt_visits = 50;
  c.workers = 1;
  njson serial, pooled;
  CHECK(run(c, &serial) == 0);
  c.workers = 4;
  CHECK(run(c, &pooled) == 0);
  CHECK(serial.dump() == pooled.dump());
  CHECK(serial["summary"]["graphs"] == 4);
  CHECK(serial["summary"]["reports"] == 76);
}

TEST_CASE("file inputs honour skip_bad") {
  const std::string path = "/tmp/critic_harness_in.g6";
  spit(path, "# corpus under test\n\n  Bw  \nnot-a-graph(\n" + to_graph6(make_cycle(5)) + "\n");

  RunConfig c;
  c.command = "analyze";
  c.input = path;
  CHECK_THROWS_AS(run(c), CriticError);

  c.skip_bad = true;
  njson rep;
  CHECK(run(c, &rep) == 0);
  REQUIRE(rep["warnings"].size() == 1);
  CHECK(rep["warnings"][0].get<std::string>().find("line 4") == 0);
  REQUIRE(rep["graphs"].size() == 2);
  CHECK(rep["graphs"][0]["graph6"] == "Bw");
  CHECK(rep["graphs"][1]["order"] == 5);
  std::remove(path.c_str());
}

TEST_CASE("out paths produce a JSON report and a CSV sibling") {
  RunConfig c;
  c.command = "verify";
  c.graph6 = "Bw";
  c.lemmas = {"vizing_adjacency"};
  c.out_path = "/tmp/critic_harness_rep.json";
  njson rep;
  CHECK(run(c, &rep) == 0);

  njson reread = njson::parse(slurp("/tmp/critic_harness_rep.json"));
  CHECK(reread.dump() == rep.dump());

  std::string csv = slurp("/tmp/critic_harness_rep.csv");
  std::istringstream lines(csv);
  std::string header, row, extra;
  REQUIRE(std::getline(lines, header));
  CHECK(header == "graph6,n,delta,lemma,params,verdict,lhs,rhs");
  REQUIRE(std::getline(lines, row));
  CHECK(row.find("Bw,3,2,vizing_adjacency,") == 0);
  CHECK(row.find(",HOLDS,1/1,1/1") != std::string::npos);
  CHECK_FALSE(std::getline(lines, extra));
  std::remove("/tmp/critic_harness_rep.json");
  std::remove("/tmp/critic_harness_rep.csv");

  // no extension: the CSV name is appended rather than swapped
  c.out_path = "/tmp/critic_harness_bare";
  CHECK(run(c, &rep) == 0);
  CHECK(slurp("/tmp/critic_harness_bare.csv").find("graph6,n,delta") == 0);
  std::remove("/tmp/critic_harness_bare");
  std::remove("/tmp/critic_harness_bare.csv");
}
