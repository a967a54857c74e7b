#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "statesurf/state_graphs.hpp"

using namespace statesurf;
using namespace testutil;

TEST_CASE("trefoil all-A graph reduces to a single edge") {
  StateComplex sc = apply_state(right_trefoil(), KauffmanState::all_A(3));
  StateGraph g = build_state_graph(sc);
  CHECK(g.vertex_count == 2);
  CHECK(g.edges.size() == 3);
  CHECK_FALSE(g.has_loop());
  ReducedStateGraph r = reduce(g);
  CHECK(r.vertex_count == 2);
  REQUIRE(r.edge_count() == 1);
  CHECK(r.edges[0].multiplicity == 3);
  CHECK(r.euler_characteristic() == 1);
  CHECK(is_tree(r));
  CHECK(stable_coefficient(r) == 0);
}

TEST_CASE("round unknot graph is a single vertex") {
  StateComplex sc = apply_state(LinkDiagram::round_unknot(), KauffmanState{});
  StateGraph g = build_state_graph(sc);
  CHECK(g.vertex_count == 1);
  CHECK(g.edges.empty());
  ReducedStateGraph r = reduce(g);
  CHECK(is_tree(r));
  CHECK(stable_coefficient(r) == 0);
}

TEST_CASE("loop edges make reduction fail") {
  StateComplex sc = apply_state(negative_kink(), KauffmanState::all_A(1));
  StateGraph g = build_state_graph(sc);
  REQUIRE(g.has_loop());
  REQUIRE_THROWS_AS(reduce(g), Error);
}

TEST_CASE("figure-eight all-A has a cycle") {
  StateComplex sc = apply_state(figure_eight_pd(), KauffmanState::all_A(4));
  ReducedStateGraph r = reduce(build_state_graph(sc));
  CHECK(r.euler_characteristic() == 0);
  CHECK_FALSE(is_tree(r));
  CHECK(stable_coefficient(r) == 1);
}

TEST_CASE("stable coefficient vanishes exactly on trees") {
  std::mt19937 rng(23);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    LinkDiagram d = random_diagram(rng);
    KauffmanState s = random_state(rng, d.crossing_count());
    StateComplex sc = apply_state(d, s);
    StateGraph g = build_state_graph(sc);
    if (g.has_loop()) continue;
    ReducedStateGraph r = reduce(g);
    // adequate states of connected diagrams give connected reduced graphs
    REQUIRE(r.is_connected());
    CHECK((stable_coefficient(r) == 0) == is_tree(r));
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("A-side stable coefficient equals the mirror's B-side") {
  std::mt19937 rng(29);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    LinkDiagram d = random_diagram(rng);
    StateComplex a = apply_state(d, KauffmanState::all_A(d.crossing_count()));
    if (!is_adequate(a)) continue;
    LinkDiagram m = mirror(d);
    StateComplex b = apply_state(m, KauffmanState::all_B(m.crossing_count()));
    REQUIRE(is_adequate(b));
    CHECK(stable_coefficient(reduce(build_state_graph(a))) ==
          stable_coefficient(reduce(build_state_graph(b))));
    ++checked;
  }
  CHECK(checked > 5);
}
