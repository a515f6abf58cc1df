#include "doctest.h"

#include <algorithm>

#include "coloring.hpp"
#include "critical.hpp"
#include "graph.hpp"
#include "kierstead.hpp"
#include "walks.hpp"

using namespace critic;

namespace {

// C5 with edge (0,1) uncolored and the rest alternating
struct C5Fixture {
  Graph g = make_cycle(5);
  EdgeColoring c{g, 2};
  int root;
  C5Fixture() {
    root = g.edge_id(0, 1);
    c.assign(g, g.edge_id(1, 2), 1);
    c.assign(g, g.edge_id(2, 3), 2);
    c.assign(g, g.edge_id(3, 4), 1);
    c.assign(g, g.edge_id(0, 4), 2);
  }
};

}  // namespace

TEST_CASE("maximal paths on the 5-cycle wrap the whole cycle") {
  C5Fixture f;
  auto paths = maximal_kierstead_paths(f.g, f.root, f.c);
  REQUIRE(paths.size() == 2);  // one per orientation of the root edge
  for (const auto& p : paths) {
    CHECK(p.vertices.size() == 5);
    CHECK(p.edge_ids.size() == 4);
    CHECK(p.edge_ids[0] == f.root);
    validate_kierstead_path(f.g, f.c, p);
  }
  CHECK(paths[0].vertices == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(paths[1].vertices == std::vector<int>{1, 0, 4, 3, 2});
}

TEST_CASE("regular graphs keep the elementary premise off") {
  C5Fixture f;
  auto paths = maximal_kierstead_paths(f.g, f.root, f.c);
  auto reports = kierstead_check(f.g, f.c, paths[0]);
  REQUIRE(reports.size() == 1);  // 5 vertices: no p4 report
  CHECK(reports[0].lemma == "kierstead_elementary");
  CHECK(reports[0].verdict == Verdict::PremiseUnsatisfied);
  CHECK(reports[0].params["premise"] == false);
}

TEST_CASE("path validation pins the invariants") {
  C5Fixture f;
  KiersteadPath bogus{{0, 1, 3}, {f.root, f.g.edge_id(2, 3)}};  // 1-3 is not an edge
  CHECK_THROWS_AS(validate_kierstead_path(f.g, f.c, bogus), CriticError);

  KiersteadPath colored_root{{1, 2, 3}, {f.g.edge_id(1, 2), f.g.edge_id(2, 3)}};
  CHECK_THROWS_AS(validate_kierstead_path(f.g, f.c, colored_root), CriticError);

  CHECK_THROWS_AS(maximal_kierstead_paths(f.g, f.g.edge_id(1, 2), f.c), CriticError);
  CHECK_THROWS_AS(maximal_kierstead_paths(f.g, 99, f.c), CriticError);
}

TEST_CASE("a 4-vertex maximal path drives the sharper clause list") {
  // path graph 0-1-2-3, root (0,1) uncolored, (1,2)=1, (2,3)=2
  Graph g = make_path(4);
  EdgeColoring c(g, 2);
  c.assign(g, g.edge_id(1, 2), 1);
  c.assign(g, g.edge_id(2, 3), 2);
  auto paths = maximal_kierstead_paths(g, g.edge_id(0, 1), c);
  REQUIRE(paths.size() == 2);
  CHECK(paths[0].vertices == std::vector<int>{0, 1, 2, 3});
  CHECK(paths[1].vertices == std::vector<int>{1, 0});

  auto reports = kierstead_check(g, c, paths[0]);
  REQUIRE(reports.size() == 2);
  // middle vertex 2 sits at maximum degree, so the plain premise is off...
  CHECK(reports[0].lemma == "kierstead_elementary");
  CHECK(reports[0].verdict == Verdict::PremiseUnsatisfied);
  // ...but the 4-vertex clause list still reports, clause by clause.  This
  // graph is class one, so the head-disjoint clause genuinely fails.
  CHECK(reports[1].lemma == "kierstead_p4");
  CHECK(reports[1].verdict == Verdict::Violated);
  auto items = reports[1].params["items"];
  CHECK(items["head_disjoint"] == "VIOLATED");
  CHECK(items["elementary_if_y2_low"] == "SKIPPED");
  CHECK(items["elementary_if_y1_low"] == "SKIPPED");
  CHECK(items["tip_overlap"] == "HOLDS");
  CHECK(reports[1].witness["clause"] == "head_disjoint");

  // the stub path in the other orientation has a vacuous premise and a
  // genuinely shared missing color
  auto stub = kierstead_check(g, c, paths[1]);
  REQUIRE(stub.size() == 1);
  CHECK(stub[0].verdict == Verdict::Violated);
  CHECK(stub[0].witness["color"] == 2);
}

TEST_CASE("maximal brooms on the 5-cycle") {
  C5Fixture f;
  auto brooms = maximal_simple_brooms(f.g, f.root, f.c);
  REQUIRE(brooms.size() == 2);
  for (const auto& b : brooms) {
    CHECK(b.vertices.size() == 4);  // head, mid, center, one tip
    CHECK(b.edge_ids.size() == 3);
    validate_simple_broom(f.g, f.c, b);
    auto rep = broom_check(f.g, f.c, b);
    CHECK(rep.lemma == "broom_elementary");
    // two head vertices over a 2-color palette can never miss 4 colors
    CHECK(rep.verdict == Verdict::PremiseUnsatisfied);
    CHECK(rep.params["head_missing"] == 2);
    CHECK(rep.params["min_mid_degree"] == 2);
  }
  CHECK(brooms[0].vertices == std::vector<int>{0, 1, 2, 3});
  CHECK(brooms[1].vertices == std::vector<int>{1, 0, 4, 3});

  SimpleBroom colored_root{{1, 2, 3}, {f.g.edge_id(1, 2), f.g.edge_id(2, 3)}};
  CHECK_THROWS_AS(validate_simple_broom(f.g, f.c, colored_root), CriticError);
  CHECK_THROWS_AS(maximal_simple_brooms(f.g, f.g.edge_id(1, 2), f.c), CriticError);
}

TEST_CASE("sampled structure sweep stays violation-free on critical graphs") {
  auto corpus = critical_corpus(7, kDefaultChiBudget);
  REQUIRE(corpus.complete);
  // pick one non-regular member so the premises actually fire somewhere
  const Graph* pick = nullptr;
  for (const auto& e : corpus.entries)
    if (e.graph.order() == 7 && e.graph.min_degree() < e.graph.max_degree()) {
      pick = &e.graph;
      break;
    }
  REQUIRE(pick != nullptr);
  auto reports = sampled_structure_checks(*pick, 5, 123, kDefaultChiBudget);
  REQUIRE(reports.size() == 3);
  long long paths_seen = 0;
  for (const auto& r : reports) {
    CHECK(r.verdict != Verdict::Violated);
    CHECK(r.params["violations"] == 0);
    CHECK(r.params["colorings"].get<long long>() > 0);
    if (r.lemma == "kierstead_elementary") paths_seen = r.params["structures"].get<long long>();
  }
  CHECK(paths_seen > 0);
}

TEST_CASE("sampling the same seed twice is reproducible") {
  Graph g = make_cycle(5);
  auto a = sample_delta_colorings(g, 0, 4, 99, kDefaultChiBudget);
  auto b = sample_delta_colorings(g, 0, 4, 99, kDefaultChiBudget);
  REQUIRE(a.size() == 4);
  REQUIRE(b.size() == 4);
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].hash() == b[i].hash());
  for (const auto& c : a) {
    CHECK(c.color(0) == 0);
    CHECK(c.palette() == 2);
    CHECK(check_proper(g, c).proper);
  }
}

TEST_CASE("edges with no reduced coloring yield no samples") {
  // the Petersen graph is class two but not critical: removing one of its
  // non-critical edges still needs 4 colors, so no 3-color sample exists
  Graph g = make_petersen();
  int eid = -1;
  for (int e = 0; e < g.size() && eid < 0; ++e)
    if (is_critical_edge(g, e, kDefaultChiBudget).outcome == EdgeCriticality::No) eid = e;
  REQUIRE(eid >= 0);
  auto samples = sample_delta_colorings(g, eid, 3, 1, kDefaultChiBudget);
  CHECK(samples.empty());
}
