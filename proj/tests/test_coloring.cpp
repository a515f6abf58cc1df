#include "doctest.h"

#include <vector>

#include "coloring.hpp"
#include "errors.hpp"
#include "graph.hpp"

using namespace critic;

TEST_CASE("assign and unassign keep the per-vertex indexes consistent") {
  Graph g = make_path(4);  // edges (0,1), (1,2), (2,3)
  EdgeColoring c(g, 2);
  CHECK(c.palette() == 2);
  CHECK(c.colored_count() == 0);
  CHECK(c.missing(1) == std::vector<int>{1, 2});

  c.assign(g, 0, 1);
  c.assign(g, 1, 2);
  CHECK(c.colored_count() == 2);
  CHECK(c.seen(1, 1));
  CHECK(c.seen(1, 2));
  CHECK(c.missing_count(1) == 0);
  CHECK(c.first_missing(1) == 0);
  CHECK(c.edge_with_color(1, 2) == 1);
  CHECK(c.edge_with_color(0, 2) == -1);
  CHECK(c.missing(2) == std::vector<int>{1});
  CHECK_FALSE(c.total(g));

  c.unassign(g, 1);
  CHECK(c.colored_count() == 1);
  CHECK(c.missing(1) == std::vector<int>{2});
  CHECK(c.edge_with_color(1, 2) == -1);
  CHECK(c.uncolored_edges() == std::vector<int>{1, 2});
}

TEST_CASE("assign enforces palette and properness") {
  Graph g = make_path(3);
  EdgeColoring c(g, 2);
  CHECK_THROWS_AS(c.assign(g, 0, 3), CriticError);
  CHECK_THROWS_AS(c.assign(g, 0, 0), CriticError);
  c.assign(g, 0, 1);
  CHECK_THROWS_AS(c.assign(g, 0, 2), CriticError);  // already colored
  CHECK_THROWS_AS(c.assign(g, 1, 1), CriticError);  // clash at vertex 1
  CHECK_THROWS_AS(c.unassign(g, 1), CriticError);   // nothing to remove
}

TEST_CASE("missing_disjoint detects shared absent colors") {
  Graph g = make_path(3);
  EdgeColoring c(g, 2);
  c.assign(g, 0, 1);
  c.assign(g, 1, 2);
  // vertex 0 misses {2}, vertex 2 misses {1}
  CHECK(c.missing_disjoint(0, 2));
  EdgeColoring blank(g, 1);
  CHECK_FALSE(blank.missing_disjoint(0, 2));  // both miss color 1
}

TEST_CASE("two isolated vertices are never elementary") {
  Graph g = Graph::build(2, {});
  EdgeColoring c(g, 1);
  auto res = is_elementary(g, c, {0, 1});
  CHECK_FALSE(res.elementary);
  CHECK(res.color == 1);
  CHECK(((res.u == 0 && res.v == 1) || (res.u == 1 && res.v == 0)));
}

TEST_CASE("check_proper accepts what assign builds") {
  Graph g = make_cycle(6);
  EdgeColoring c(g, 2);
  for (int v = 0; v < 6; ++v) c.assign(g, g.edge_id(v, (v + 1) % 6), 1 + v % 2);
  auto pc = check_proper(g, c);
  CHECK(pc.proper);
  CHECK(c.total(g));
}

TEST_CASE("kempe chain shapes: path, even cycle, lone vertex") {
  Graph c4 = make_cycle(4);
  EdgeColoring alt(c4, 2);
  alt.assign(c4, c4.edge_id(0, 1), 1);
  alt.assign(c4, c4.edge_id(1, 2), 2);
  alt.assign(c4, c4.edge_id(2, 3), 1);
  alt.assign(c4, c4.edge_id(0, 3), 2);
  auto cyc = kempe_chain(c4, alt, 0, 1, 2);
  CHECK(cyc.kind == KempeChain::EvenCycle);
  CHECK(cyc.vertices.size() == 4);
  CHECK(cyc.edge_ids.size() == 4);

  Graph p3 = make_path(3);
  EdgeColoring pc(p3, 2);
  pc.assign(p3, 0, 1);
  pc.assign(p3, 1, 2);
  auto path = kempe_chain(p3, pc, 0, 1, 2);
  CHECK(path.kind == KempeChain::Path);
  CHECK(path.vertices == std::vector<int>{0, 1, 2});
  CHECK(path.edge_ids.size() == 2);

  EdgeColoring sparse(p3, 2);
  sparse.assign(p3, 0, 1);
  auto single = kempe_chain(p3, sparse, 2, 1, 2);
  CHECK(single.kind == KempeChain::Path);
  CHECK(single.vertices == std::vector<int>{2});
  CHECK(single.edge_ids.empty());
}

TEST_CASE("kempe switch is an involution and keeps properness") {
  Graph g = make_cycle(5);
  EdgeColoring c(g, 3);  // edge (0,1) left uncolored
  c.assign(g, g.edge_id(1, 2), 1);
  c.assign(g, g.edge_id(2, 3), 2);
  c.assign(g, g.edge_id(3, 4), 1);
  c.assign(g, g.edge_id(0, 4), 2);

  uint64_t before = c.hash();
  EdgeColoring once = kempe_switch(g, c, 1, 1, 2);
  CHECK(check_proper(g, once).proper);
  CHECK(once.hash() != before);
  EdgeColoring twice = kempe_switch(g, once, 1, 1, 2);
  CHECK(twice.hash() == before);
  for (int e = 0; e < g.size(); ++e) CHECK(twice.color(e) == c.color(e));

  EdgeColoring inplace = c;
  kempe_switch_inplace(g, inplace, 1, 1, 2);
  CHECK(inplace.hash() == once.hash());
}

TEST_CASE("json round-trip preserves the assignment") {
  Graph g = make_cycle(5);
  EdgeColoring c(g, 3);
  c.assign(g, 0, 1);
  c.assign(g, 2, 2);
  njson j = c.to_json(g);
  EdgeColoring back = EdgeColoring::from_json(g, j);
  CHECK(back.hash() == c.hash());
  CHECK(back.palette() == 3);
  for (int e = 0; e < g.size(); ++e) CHECK(back.color(e) == c.color(e));
}

TEST_CASE("improper json is rejected") {
  Graph g = make_path(3);
  njson j{{"k", 2}, {"edges", njson::array({njson::array({0, 1, 1}), njson::array({1, 2, 1})})}};
  CHECK_THROWS_AS(EdgeColoring::from_json(g, j), CriticError);
  njson bad{{"k", 2}, {"edges", njson::array({njson::array({0, 2, 1})})}};
  CHECK_THROWS_AS(EdgeColoring::from_json(g, bad), CriticError);  // non-edge
}
