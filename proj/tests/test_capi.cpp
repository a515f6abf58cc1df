#include "doctest.h"

#include <cstring>
#include <string>

#include "chromatic_critic.h"
#include "report.hpp"

using critic::njson;

TEST_CASE("version and status names are stable") {
  CHECK(std::string(cc_version()) == "1.0.0");
  CHECK(std::string(cc_status_name(CC_OK)) == "CC_OK");
  CHECK(std::string(cc_status_name(CC_MALFORMED)) == "CC_MALFORMED");
  CHECK(std::string(cc_status_name(CC_BAD_PARAM)) == "CC_BAD_PARAM");
  CHECK(std::string(cc_status_name(CC_BUDGET_EXHAUSTED)) == "CC_BUDGET_EXHAUSTED");
  CHECK(std::string(cc_status_name(CC_INTERNAL)) == "CC_INTERNAL");
}

TEST_CASE("graph handles round-trip through graph6") {
  cc_graph* g = nullptr;
  REQUIRE(cc_graph_from_graph6("Bw", &g) == CC_OK);
  REQUIRE(g != nullptr);
  CHECK(cc_graph_order(g) == 3);
  CHECK(cc_graph_size(g) == 3);
  char* text = nullptr;
  REQUIRE(cc_graph_to_graph6(g, &text) == CC_OK);
  CHECK(std::string(text) == "Bw");
  cc_string_free(text);
  cc_graph_free(g);
}

TEST_CASE("family generation matches the graph6 route") {
  cc_graph* g = nullptr;
  REQUIRE(cc_graph_generate("petersen", &g) == CC_OK);
  CHECK(cc_graph_order(g) == 10);
  CHECK(cc_graph_size(g) == 15);
  char* text = nullptr;
  REQUIRE(cc_graph_to_graph6(g, &text) == CC_OK);
  CHECK(std::string(text) == "IheA@GUAo");
  cc_string_free(text);
  cc_graph_free(g);

  g = nullptr;
  REQUIRE(cc_graph_generate("random:10,1/2,42", &g) == CC_OK);
  CHECK(cc_graph_order(g) == 10);
  cc_graph_free(g);

  g = nullptr;
  CHECK(cc_graph_generate("moebius_kantor", &g) == CC_BAD_PARAM);
  CHECK(g == nullptr);
  CHECK(std::strlen(cc_last_error()) > 0);
}

TEST_CASE("errors land in the thread-local message store") {
  cc_graph* g = nullptr;
  CHECK(cc_graph_from_graph6("not-a-graph(", &g) == CC_MALFORMED);
  CHECK(g == nullptr);
  CHECK(std::strlen(cc_last_error()) > 0);

  // the next successful call clears the message
  REQUIRE(cc_graph_from_graph6("Bw", &g) == CC_OK);
  CHECK(std::string(cc_last_error()).empty());
  cc_graph_free(g);
}

TEST_CASE("null arguments are rejected, not dereferenced") {
  cc_graph* g = nullptr;
  CHECK(cc_graph_from_graph6(nullptr, &g) == CC_BAD_PARAM);
  CHECK(cc_graph_from_graph6("Bw", nullptr) == CC_BAD_PARAM);
  CHECK(cc_graph_generate(nullptr, &g) == CC_BAD_PARAM);
  CHECK(cc_graph_order(nullptr) == -1);
  CHECK(cc_graph_size(nullptr) == -1);
  char* text = nullptr;
  CHECK(cc_graph_to_graph6(nullptr, &text) == CC_BAD_PARAM);
  CHECK(cc_chromatic_index(nullptr, 0, nullptr, nullptr) == CC_BAD_PARAM);
  char* json = nullptr;
  CHECK(cc_criticality_json(nullptr, 0, &json) == CC_BAD_PARAM);
  CHECK(cc_pipeline_json(nullptr, 0, 0, 0, &json) == CC_BAD_PARAM);
  int exit_code = 0;
  CHECK(cc_run_json(nullptr, &json, &exit_code) == CC_BAD_PARAM);
  cc_graph_free(nullptr);   // both free functions shrug at NULL
  cc_string_free(nullptr);
}

TEST_CASE("chromatic index reports exactness") {
  cc_graph* g = nullptr;
  REQUIRE(cc_graph_from_graph6("Bw", &g) == CC_OK);
  int chi = 0, exact = 0;
  REQUIRE(cc_chromatic_index(g, 0, &chi, &exact) == CC_OK);  // 0 budget = default
  CHECK(chi == 3);
  CHECK(exact == 1);
  cc_graph_free(g);

  g = nullptr;
  REQUIRE(cc_graph_generate("petersen", &g) == CC_OK);
  chi = -1;
  exact = -1;
  REQUIRE(cc_chromatic_index(g, 1, &chi, &exact) == CC_OK);  // starved, still CC_OK
  CHECK(chi == 0);
  CHECK(exact == 0);
  cc_graph_free(g);
}

TEST_CASE("criticality report serializes the certificate") {
  cc_graph* g = nullptr;
  REQUIRE(cc_graph_from_graph6("Bw", &g) == CC_OK);
  char* json = nullptr;
  REQUIRE(cc_criticality_json(g, 0, &json) == CC_OK);
  njson rep = njson::parse(json);
  CHECK(rep["connected"] == true);
  CHECK(rep["max_degree"] == 2);
  CHECK(rep["chromatic_index"] == 3);
  CHECK(rep["class_two"] == true);
  CHECK(rep["critical"] == true);
  CHECK(rep["complete"] == true);
  cc_string_free(json);
  cc_graph_free(g);
}

TEST_CASE("pipeline JSON carries all seven stages") {
  cc_graph* g = nullptr;
  REQUIRE(cc_graph_generate("petersen", &g) == CC_OK);
  char* json = nullptr;
  REQUIRE(cc_pipeline_json(g, 0, 0, 7, &json) == CC_OK);
  njson rep = njson::parse(json);
  CHECK(rep["graph6"] == "IheA@GUAo");
  REQUIRE(rep["stages"].size() == 7);
  for (auto& stage : rep["stages"]) CHECK(stage["verdict"] == "PREMISE_UNSATISFIED");
  cc_string_free(json);
  cc_graph_free(g);
}

TEST_CASE("batch runs go through one JSON door") {
  char* json = nullptr;
  int exit_code = -1;
  REQUIRE(cc_run_json(R"({"command":"analyze","graph6":"Bw"})", &json, &exit_code) == CC_OK);
  CHECK(exit_code == 0);
  njson rep = njson::parse(json);
  CHECK(rep["command"] == "analyze");
  CHECK(rep["graphs"][0]["critical"] == true);
  cc_string_free(json);

  json = nullptr;
  CHECK(cc_run_json("{nope", &json, &exit_code) == CC_MALFORMED);
  CHECK(json == nullptr);

  // a violated lemma comes back as a normal report with exit code 2
  json = nullptr;
  exit_code = -1;
  REQUIRE(cc_run_json(R"({"command":"verify","graph6":"D~?","lemmas":["9"]})", &json,
                      &exit_code) == CC_OK);
  CHECK(exit_code == 2);
  njson viol = njson::parse(json);
  CHECK(viol["summary"]["violated"] == 1);
  cc_string_free(json);

  CHECK(cc_run_json(R"({"command":"fly"})", &json, &exit_code) == CC_BAD_PARAM);
}
