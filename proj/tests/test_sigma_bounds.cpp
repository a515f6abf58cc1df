#include "doctest.h"

#include "graph.hpp"
#include "sigma_bounds.hpp"

using namespace critic;

TEST_CASE("fan bound on the subdivided K12, q = 1") {
  Graph g = make_subdivided_complete(12);
  auto rep = check_sigma_bounds(g, Rational(1), BoundMode::FanBound);
  CHECK(rep.lemma == "fan_bound");
  CHECK(rep.verdict == Verdict::Holds);
  // only the degree-2 subdivision vertex qualifies, through both of its edges
  CHECK(rep.params["instances"] == 2);
  CHECK(rep.lhs == "20/1");
  CHECK(rep.rhs == "98/5");
  CHECK(rep.witness["tightest"]["x"] == 12);
}

TEST_CASE("q outside (0, max_degree - 10] is vacuous") {
  Graph g = make_subdivided_complete(12);
  CHECK(check_sigma_bounds(g, Rational(2), BoundMode::FanBound).verdict ==
        Verdict::PremiseUnsatisfied);
  CHECK(check_sigma_bounds(g, Rational(0), BoundMode::FanBound).verdict ==
        Verdict::PremiseUnsatisfied);
  CHECK(check_sigma_bounds(make_petersen(), Rational(1), BoundMode::FanBound).verdict ==
        Verdict::PremiseUnsatisfied);
  CHECK(check_sigma_bounds(make_petersen(), Rational(1), BoundMode::BroomBound).verdict ==
        Verdict::PremiseUnsatisfied);
}

TEST_CASE("regular graphs have no low-degree edge to test") {
  auto rep = check_sigma_bounds(make_complete(13), Rational(1), BoundMode::FanBound);
  CHECK(rep.verdict == Verdict::PremiseUnsatisfied);
  CHECK(rep.params["instances"] == 0);
}

TEST_CASE("broom bound needs the min-degree floor") {
  // subdivision vertex has degree 2 < 11/2
  auto rep = check_sigma_bounds(make_subdivided_complete(12), Rational(1), BoundMode::BroomBound);
  CHECK(rep.verdict == Verdict::PremiseUnsatisfied);
  auto k13 = check_sigma_bounds(make_complete(13), Rational(1), BoundMode::BroomBound);
  CHECK(k13.verdict == Verdict::PremiseUnsatisfied);  // every edge sum is 24, not below 18
}

TEST_CASE("broom bound arithmetic on an off-population graph") {
  // K_{6,6} plus an apex joined to everything: max degree 12, the bipartite
  // edges have degree sum 14 < 18.  The bound fails here (the graph is far
  // from edge-critical), which pins down the exact rhs arithmetic.
  std::vector<std::pair<int, int>> es;
  for (int a = 0; a < 6; ++a)
    for (int b = 6; b < 12; ++b) es.push_back({a, b});
  for (int v = 0; v < 12; ++v) es.push_back({v, 12});
  Graph g = Graph::build(13, es);
  CHECK(g.max_degree() == 12);
  CHECK(g.min_degree() == 7);

  auto rep = check_sigma_bounds(g, Rational(1), BoundMode::BroomBound);
  CHECK(rep.lemma == "broom_bound");
  CHECK(rep.verdict == Verdict::Violated);
  CHECK(rep.params["instances"] == 72);
  CHECK(rep.lhs == "17/1");                 // apex pivot: 11 + 6
  CHECK(rep.rhs == "234/11");               // 3*12 - 14 - 8/11 - 0
  CHECK(rep.witness["violations"].size() == 72);
}

TEST_CASE("fan bound catches impossible instances outright") {
  // a degree-1 vertex attached to a high-degree core has no second neighbor z
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < 12; ++i)
    for (int j = i + 1; j < 12; ++j) es.push_back({i, j});
  es.push_back({0, 12});
  Graph g = Graph::build(13, es);  // K12 plus a pendant at 0
  CHECK(g.max_degree() == 12);
  auto rep = check_sigma_bounds(g, Rational(1), BoundMode::FanBound);
  CHECK(rep.verdict == Verdict::Violated);
  bool saw_null_z = false;
  for (const auto& v : rep.witness["violations"])
    if (v["z"].is_null()) saw_null_z = true;
  CHECK(saw_null_z);
}
