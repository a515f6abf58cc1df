#include "doctest.h"

#include "coloring.hpp"
#include "enumerate.hpp"
#include "exact_chromatic.hpp"
#include "graph.hpp"
#include "vizing.hpp"

using namespace critic;

TEST_CASE("known chromatic indexes") {
  auto chi = [](const Graph& g) {
    auto r = chromatic_index(g);
    REQUIRE(r.status == ChromaticIndex::Exact);
    CHECK(r.witness.total(g));
    CHECK(check_proper(g, r.witness).proper);
    CHECK(r.witness.palette() == r.value);
    CHECK(r.class_two == (r.value == g.max_degree() + 1));
    return r.value;
  };
  CHECK(chi(make_cycle(5)) == 3);
  CHECK(chi(make_cycle(6)) == 2);
  CHECK(chi(make_petersen()) == 4);
  CHECK(chi(make_complete_bipartite(3, 3)) == 3);
  CHECK(chi(make_complete(4)) == 3);
  CHECK(chi(make_complete(5)) == 5);
  CHECK(chi(make_star(6)) == 5);
  CHECK(chi(make_path(4)) == 2);
}

TEST_CASE("value is always max_degree or max_degree+1") {
  for (const Graph& g : enumerate_all(6)) {
    if (g.size() == 0) continue;
    auto r = chromatic_index(g);
    REQUIRE(r.status == ChromaticIndex::Exact);
    CHECK((r.value == g.max_degree() || r.value == g.max_degree() + 1));
  }
}

TEST_CASE("decision search statuses") {
  auto found = solve_edge_coloring(make_cycle(6), 2, kDefaultChiBudget);
  CHECK(found.status == ExactColoring::Found);
  CHECK(check_proper(make_cycle(6), found.coloring).proper);

  auto infeasible = solve_edge_coloring(make_complete(3), 2, kDefaultChiBudget);
  CHECK(infeasible.status == ExactColoring::Infeasible);

  auto starved = solve_edge_coloring(make_petersen(), 3, 3);
  CHECK(starved.status == ExactColoring::Budget);
  CHECK(starved.nodes >= 3);
}

TEST_CASE("budget exhaustion surfaces instead of a wrong answer") {
  auto r = chromatic_index(make_petersen(), 2);
  CHECK(r.status == ChromaticIndex::Budget);
}

TEST_CASE("node counts are reproducible") {
  auto a = chromatic_index(make_petersen());
  auto b = chromatic_index(make_petersen());
  CHECK(a.nodes == b.nodes);
  CHECK(a.witness.hash() == b.witness.hash());
}
