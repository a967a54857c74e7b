#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "statesurf/polyhedra.hpp"

using namespace statesurf;
using namespace testutil;

namespace {
std::string state_to_string_local(const KauffmanState& s) {
  std::string out;
  for (Resolution r : s.choice) out += resolution_char(r);
  return out;
}
}  // namespace

TEST_CASE("prime diagrams have no non-prime arcs") {
  for (const LinkDiagram& d : {right_trefoil(), figure_eight(), torus_2q(5)}) {
    StateComplex sc = apply_state(d, KauffmanState::all_A(d.crossing_count()));
    CHECK(maximal_nonprime_arcs(sc).empty());
  }
}

TEST_CASE("trefoil all-A decomposes into one (2,3) polyhedron") {
  LinkDiagram d = right_trefoil();
  StateComplex sc = apply_state(d, KauffmanState::all_A(3));
  auto arcs = maximal_nonprime_arcs(sc);
  auto regions = decompose_regions(sc, arcs);
  REQUIRE(regions.size() == 1);
  CHECK(regions[0].segments == std::vector<int>{0, 1, 2});
  REQUIRE(regions[0].boundary_curves.size() == 2);

  LowerPolyhedron poly = lower_skeleton(regions[0]);
  CHECK(poly.skeleton.vertex_count() == 3);
  CHECK(poly.skeleton.edge_count() == 6);
  CHECK(poly.skeleton.face_count() == 5);
  CHECK(poly.skeleton.is_planar_connected());
  CHECK(poly.skeleton.isomorphic_to(d.map()));
  CHECK(skeleton_is_2q_pattern(poly));
  CHECK(poly.shaded_count == 2);
  CHECK(poly.white_count == 3);
}

TEST_CASE("(2,q) skeleton shading by handedness") {
  // Left-handed: the all-A circles bound the bigon chain, so the shaded
  // faces are the q bigons.  Right-handed: the two q-gons are shaded.
  LinkDiagram left = braid_closure({2, {-1, -1, -1, -1}});
  StateComplex sc = apply_state(left, KauffmanState::all_A(4));
  auto regions = decompose_regions(sc, maximal_nonprime_arcs(sc));
  REQUIRE(regions.size() == 1);
  LowerPolyhedron poly = lower_skeleton(regions[0]);
  CHECK(skeleton_is_2q_pattern(poly));
  CHECK(poly.shaded_count == 4);
  for (int f = 0; f < poly.skeleton.face_count(); ++f)
    if (poly.face_shaded[f]) CHECK(poly.skeleton.face_degree(f) == 2);

  LinkDiagram right = torus_2q(4);
  StateComplex sc_r = apply_state(right, KauffmanState::all_A(4));
  auto regions_r = decompose_regions(sc_r, maximal_nonprime_arcs(sc_r));
  REQUIRE(regions_r.size() == 1);
  LowerPolyhedron poly_r = lower_skeleton(regions_r[0]);
  CHECK(skeleton_is_2q_pattern(poly_r));
  CHECK(poly_r.shaded_count == 2);
  CHECK(poly_r.white_count == 4);
}

TEST_CASE("a connected sum yields exactly one non-prime arc") {
  LinkDiagram d = connected_sum(right_trefoil(), right_trefoil());
  StateComplex sc = apply_state(d, KauffmanState::all_A(6));
  REQUIRE(is_adequate(sc));
  REQUIRE(is_homogeneous(sc));
  auto arcs = maximal_nonprime_arcs(sc);
  REQUIRE(arcs.size() == 1);
  auto regions = decompose_regions(sc, arcs);
  REQUIRE(regions.size() == 2);
  for (const auto& region : regions) {
    CHECK(region.segments.size() == 3);
    LowerPolyhedron poly = lower_skeleton(region);
    CHECK(poly.skeleton.vertex_count() == 3);
    CHECK(skeleton_is_2q_pattern(poly));
    CHECK(map_is_prime_4valent(poly.skeleton));
  }
}

TEST_CASE("nested connected sum via a braid closure") {
  LinkDiagram d = braid_closure({3, {1, 1, 1, -2, -2, -2}});
  KauffmanState s = seifert_state(d, d.reference_orientation());
  StateComplex sc = apply_state(d, s);
  auto arcs = maximal_nonprime_arcs(sc);
  auto regions = decompose_regions(sc, arcs);
  CHECK(regions.size() == 2);  // one per braid column, already separated by a circle
  for (const auto& region : regions) CHECK(lower_skeleton(region).skeleton.vertex_count() == 3);
}

TEST_CASE("12n0873 Seifert state: one region per label-constant column") {
  LinkDiagram d = knot_12n0873();
  KauffmanState s = seifert_state(d, d.reference_orientation());
  StateComplex sc = apply_state(d, s);
  auto arcs = maximal_nonprime_arcs(sc);
  CHECK(arcs.empty());
  auto regions = decompose_regions(sc, arcs);
  CHECK(regions.size() == complementary_regions(sc).size());
  CHECK(regions.size() == 4);
  for (const auto& region : regions) {
    LowerPolyhedron poly = lower_skeleton(region);
    CHECK(skeleton_is_2q_pattern(poly));
  }
}

TEST_CASE("round unknot decomposes to nothing") {
  StateComplex sc = apply_state(LinkDiagram::round_unknot(), KauffmanState{});
  CHECK(decompose_regions(sc, {}).empty());
  CHECK(maximal_nonprime_arcs(sc).empty());
}

TEST_CASE("claims verification on a connected sum with a non-prime arc") {
  LinkDiagram d = connected_sum(right_trefoil(), right_trefoil());
  PolyhedralClaimsReport report = verify_polyhedral_claims(d, KauffmanState::all_A(6));
  CHECK(report.hypotheses_met);
  CHECK(report.arc_count == 1);
  CHECK(report.region_count == 2);
  CHECK(report.white_faces_match);
  CHECK(report.all_pass());
}

TEST_CASE("claims verification on hypothesis-satisfying states") {
  for (const LinkDiagram& d : {right_trefoil(), figure_eight(), torus_2q(4)}) {
    PolyhedralClaimsReport report =
        verify_polyhedral_claims(d, KauffmanState::all_A(d.crossing_count()));
    CHECK(report.hypotheses_met);
    CHECK(report.all_pass());
  }
  LinkDiagram k12 = knot_12n0873();
  PolyhedralClaimsReport report =
      verify_polyhedral_claims(k12, seifert_state(k12, k12.reference_orientation()));
  CHECK(report.hypotheses_met);
  CHECK(report.region_count == 4);
  CHECK(report.all_pass());
}

TEST_CASE("claims verification reports unmet hypotheses") {
  PolyhedralClaimsReport report = verify_polyhedral_claims(knot_12n0873(), KauffmanState::all_A(12));
  CHECK_FALSE(report.hypotheses_met);
  CHECK_FALSE(report.all_pass());
}

TEST_CASE("inadequate states are rejected by the arc search") {
  StateComplex sc = apply_state(negative_kink(), KauffmanState::all_A(1));
  REQUIRE_THROWS_AS(maximal_nonprime_arcs(sc), Error);
}

TEST_CASE("claims hold on random hypothesis-satisfying states") {
  // 4-valence, Euler, checkerboard, the segment partition and the white-face
  // count hold for every adequate homogeneous state of a connected diagram.
  // Prime sub-diagrams additionally need a prime diagram: a nugatory
  // crossing's segment sits alone in its region and no non-prime arc can
  // split it, so reducible diagrams yield one-crossing regions.
  std::mt19937 rng(57);
  int verified = 0, prime_cases = 0;
  for (int trial = 0; trial < 120 && verified < 40; ++trial) {
    LinkDiagram d = random_diagram(rng);
    for (const KauffmanState& s :
         {KauffmanState::all_A(d.crossing_count()), KauffmanState::all_B(d.crossing_count()),
          seifert_state(d, d.reference_orientation())}) {
      StateComplex sc = apply_state(d, s);
      if (!is_adequate(sc) || !is_homogeneous(sc)) continue;
      PolyhedralClaimsReport report = verify_polyhedral_claims(d, s);
      INFO("braid diagram with " << d.crossing_count() << " crossings, state "
                                 << state_to_string_local(s));
      CHECK(report.hypotheses_met);
      CHECK(report.segments_partitioned);
      CHECK(report.white_faces_match);
      for (const auto& row : report.polyhedra) {
        CHECK(row.four_valent);
        CHECK(row.euler);
        CHECK(row.checkerboard);
      }
      if (is_prime(d)) {
        CHECK(report.all_pass());
        ++prime_cases;
      }
      ++verified;
    }
  }
  CHECK(verified >= 40);
  CHECK(prime_cases >= 8);
}

TEST_CASE("a corrupted polyhedron fails the 4-valence claim") {
  // Theta graph: two 3-valent vertices joined by three edges.
  std::vector<int> sigma = {1, 2, 0, 4, 5, 3};
  std::vector<int> alpha = {3, 5, 4, 0, 2, 1};
  LowerPolyhedron poly;
  poly.skeleton = CombinatorialMap(sigma, alpha);
  poly.skeleton.validate();
  poly.face_shaded.assign(poly.skeleton.face_count(), 0);
  PolyhedronClaims claims = check_lower_polyhedron(poly);
  CHECK_FALSE(claims.four_valent);
  CHECK_FALSE(claims.pass());
}
