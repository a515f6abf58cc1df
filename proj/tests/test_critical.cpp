#include "doctest.h"

#include <algorithm>

#include "critical.hpp"
#include "enumerate.hpp"
#include "graph.hpp"
#include "graph6.hpp"

using namespace critic;

TEST_CASE("odd cycles are edge-critical") {
  auto r = edge_delta_criticality(make_complete(3));
  CHECK(r.complete);
  CHECK(r.connected);
  CHECK(r.delta == 2);
  CHECK(r.chi == 3);
  CHECK(r.class_two);
  CHECK(r.is_delta_critical);
  REQUIRE(r.removal_chi.size() == 3);
  for (int chi_minus : r.removal_chi) CHECK(chi_minus == 2);

  CHECK(edge_delta_criticality(make_cycle(5)).is_delta_critical);
  CHECK(edge_delta_criticality(make_cycle(7)).is_delta_critical);
}

TEST_CASE("class-one graphs are not critical") {
  auto c6 = edge_delta_criticality(make_cycle(6));
  CHECK(c6.complete);
  CHECK_FALSE(c6.class_two);
  CHECK_FALSE(c6.is_delta_critical);

  CHECK_FALSE(edge_delta_criticality(make_complete(4)).is_delta_critical);
  CHECK_FALSE(edge_delta_criticality(make_star(5)).is_delta_critical);
}

TEST_CASE("the petersen graph is class two but not critical") {
  auto r = edge_delta_criticality(make_petersen());
  CHECK(r.complete);
  CHECK(r.class_two);
  CHECK(r.chi == 4);
  CHECK_FALSE(r.is_delta_critical);
  // some removal keeps the index at 4
  CHECK(std::count(r.removal_chi.begin(), r.removal_chi.end(), 4) > 0);
}

TEST_CASE("K5 is class two but not critical") {
  // K5 minus an edge still has 9 edges, and 4 color classes of at most two
  // edges each cover only 8 of them, so the removal keeps the index at 5
  auto r = edge_delta_criticality(make_complete(5));
  CHECK(r.class_two);
  CHECK(r.chi == 5);
  CHECK_FALSE(r.is_delta_critical);
  CHECK(std::count(r.removal_chi.begin(), r.removal_chi.end(), 5) == 10);
}

TEST_CASE("disconnected graphs are never catalogued as critical") {
  Graph two_triangles = Graph::build(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  auto r = edge_delta_criticality(two_triangles);
  CHECK_FALSE(r.connected);
  CHECK_FALSE(r.is_delta_critical);
}

TEST_CASE("small corpus contents are exactly the known ones") {
  auto corpus = critical_corpus(5, kDefaultChiBudget);
  CHECK(corpus.complete);
  REQUIRE(corpus.entries.size() == 4);
  // sorted by (order, graph6): K3 first, then the three 5-vertex graphs
  CHECK(corpus.entries[0].graph6 == "Bw");
  CHECK(corpus.entries[0].delta == 2);
  CHECK(corpus.entries[0].chi == 3);
  bool has_c5 = false;
  std::vector<int> orders;
  for (const auto& e : corpus.entries) {
    CHECK(e.chi == e.delta + 1);
    CHECK(to_graph6(e.graph) == e.graph6);
    orders.push_back(e.graph.order());
    if (isomorphic(e.graph, make_cycle(5))) has_c5 = true;
    // K5 is class two but not critical, so it must stay out
    CHECK_FALSE(isomorphic(e.graph, make_complete(5)));
  }
  CHECK(has_c5);
  CHECK(orders == std::vector<int>{3, 5, 5, 5});
}

TEST_CASE("no even-order graph below 8 vertices is critical") {
  auto corpus = critical_corpus(6, kDefaultChiBudget);
  CHECK(corpus.complete);
  for (const auto& e : corpus.entries) CHECK(e.graph.order() % 2 == 1);
  CHECK(corpus.entries.size() == 4);
}

TEST_CASE("corpus growth at order 7") {
  auto corpus = critical_corpus(7, kDefaultChiBudget);
  CHECK(corpus.complete);
  CHECK(corpus.entries.size() == 26);
  CHECK(std::all_of(corpus.entries.begin(), corpus.entries.end(),
                    [](const CorpusEntry& e) { return e.graph.order() <= 7; }));
  // sorted by order then key
  for (size_t i = 1; i < corpus.entries.size(); ++i) {
    const auto& a = corpus.entries[i - 1];
    const auto& b = corpus.entries[i];
    CHECK((a.graph.order() < b.graph.order() ||
           (a.graph.order() == b.graph.order() && a.graph6 < b.graph6)));
  }
}

TEST_CASE("budget starvation is reported, not papered over") {
  auto r = edge_delta_criticality(make_petersen(), 5);
  CHECK_FALSE(r.complete);
  auto corpus = critical_corpus(5, 1);
  CHECK_FALSE(corpus.complete);
}

TEST_CASE("per-edge criticality") {
  Graph c5 = make_cycle(5);
  auto one = is_critical_edge(c5, 0, kDefaultChiBudget);
  CHECK(one.outcome == EdgeCriticality::Yes);
  CHECK(one.chi == 3);
  CHECK(one.chi_minus == 2);
  Graph c6 = make_cycle(6);
  CHECK(is_critical_edge(c6, 0, kDefaultChiBudget).outcome == EdgeCriticality::No);
}
