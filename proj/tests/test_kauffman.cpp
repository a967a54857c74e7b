#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "statesurf/kauffman.hpp"

using namespace statesurf;
using namespace testutil;

TEST_CASE("trefoil all-A splice: two circles, three parallel segments") {
  LinkDiagram d = right_trefoil();
  StateComplex sc = apply_state(d, KauffmanState::all_A(3));
  CHECK(sc.circle_count() == 2);
  CHECK(sc.crossing_count == 3);
  for (int c = 0; c < 3; ++c) CHECK(sc.segment_circle_u(c) != sc.segment_circle_v(c));
  CHECK(is_adequate(sc));
  CHECK(is_homogeneous(sc));
  auto regions = complementary_regions(sc);
  REQUIRE(regions.size() == 1);
  CHECK(regions[0] == std::vector<int>{0, 1, 2});
}

TEST_CASE("trefoil all-B has three circles") {
  StateComplex sc = apply_state(right_trefoil(), KauffmanState::all_B(3));
  CHECK(sc.circle_count() == 3);
  CHECK(is_adequate(sc));
}

TEST_CASE("round unknot: one circle, no segments") {
  StateComplex sc = apply_state(LinkDiagram::round_unknot(), KauffmanState{});
  CHECK(sc.circle_count() == 1);
  CHECK(sc.crossing_count == 0);
  CHECK(complementary_regions(sc).empty());
  CHECK(is_adequate(sc));
  CHECK(is_homogeneous(sc));
}

TEST_CASE("(2,4) torus link all-A: two circles, four parallel segments") {
  StateComplex sc = apply_state(torus_2q(4), KauffmanState::all_A(4));
  CHECK(sc.circle_count() == 2);
  auto regions = complementary_regions(sc);
  REQUIRE(regions.size() == 1);
  CHECK(regions[0].size() == 4);
}

TEST_CASE("one-crossing diagrams: exactly one of the two states is a loop") {
  // The smoothing that merges gives a loop segment on one circle; the other
  // state has two circles and is adequate.  Which is which depends on the
  // kink's sign.
  StateComplex pos_a = apply_state(positive_kink(), KauffmanState::all_A(1));
  StateComplex pos_b = apply_state(positive_kink(), KauffmanState::all_B(1));
  CHECK(pos_a.circle_count() == 2);
  CHECK(pos_b.circle_count() == 1);
  CHECK(is_adequate(pos_a));
  CHECK_FALSE(is_adequate(pos_b));

  StateComplex neg_a = apply_state(negative_kink(), KauffmanState::all_A(1));
  CHECK(neg_a.circle_count() == 1);
  CHECK_FALSE(is_adequate(neg_a));
  CHECK(is_adequate(apply_state(negative_kink(), KauffmanState::all_B(1))));
}

TEST_CASE("figure-eight all-A") {
  StateComplex sc = apply_state(figure_eight_pd(), KauffmanState::all_A(4));
  CHECK(sc.circle_count() == 3);
  CHECK(is_adequate(sc));
  CHECK(is_homogeneous(sc));
}

TEST_CASE("Seifert-state regions of a two-column braid closure") {
  LinkDiagram d = braid_closure({3, {1, -2}});
  KauffmanState s = seifert_state(d, d.reference_orientation());
  StateComplex sc = apply_state(d, s);
  CHECK(sc.circle_count() == 3);  // one Seifert circle per strand
  auto regions = complementary_regions(sc);
  CHECK(regions.size() == 2);  // one region per braid column
  CHECK(is_homogeneous(sc));
}

TEST_CASE("seifert state of a positive braid is the all-A state") {
  LinkDiagram d = right_trefoil();
  KauffmanState s = seifert_state(d, d.reference_orientation());
  CHECK(s == KauffmanState::all_A(3));
}

TEST_CASE("seifert state is reversal invariant") {
  for (const LinkDiagram& d : {figure_eight(), hopf_link(), knot_12n0873()}) {
    Orientation o = d.reference_orientation();
    Orientation r = o;
    for (auto& f : r.flip) f ^= 1;
    CHECK(seifert_state(d, o) == seifert_state(d, r));
  }
}

TEST_CASE("figure-eight Seifert state mixes labels over three circles") {
  LinkDiagram d = figure_eight();
  KauffmanState s = seifert_state(d, d.reference_orientation());
  CHECK(s.count(Resolution::A) == 2);
  CHECK(s.count(Resolution::B) == 2);
  StateComplex sc = apply_state(d, s);
  CHECK(sc.circle_count() == 3);
}

TEST_CASE("12n0873 Seifert state is adequate and homogeneous, all-A and all-B are not") {
  LinkDiagram d = knot_12n0873();
  StateComplex seifert = apply_state(d, seifert_state(d, d.reference_orientation()));
  CHECK(is_adequate(seifert));
  CHECK(is_homogeneous(seifert));
  CHECK_FALSE(is_adequate(apply_state(d, KauffmanState::all_A(12))));
  CHECK_FALSE(is_adequate(apply_state(d, KauffmanState::all_B(12))));
}

TEST_CASE("a region with mixed labels is inhomogeneous") {
  // Flipping one crossing inside a braid column of the 12n0873 Seifert state
  // mixes the labels of the region the column lives in.
  LinkDiagram d = knot_12n0873();
  KauffmanState s = seifert_state(d, d.reference_orientation());
  s.choice[1] = opposite(s.choice[1]);
  CHECK_FALSE(is_homogeneous(apply_state(d, s)));

  // Only the extreme states and the Seifert state are homogeneous here.
  FastStateEvaluator eval(d);
  int homogeneous = 0;
  for (uint64_t mask = 0; mask < (uint64_t(1) << 12); ++mask)
    if (eval.evaluate(KauffmanState::from_mask(12, mask)).homogeneous) ++homogeneous;
  CHECK(homogeneous == 3);
}

TEST_CASE("fast evaluator agrees with the full state complex") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    LinkDiagram d = random_diagram(rng);
    FastStateEvaluator eval(d);
    for (int k = 0; k < 8; ++k) {
      KauffmanState s = random_state(rng, d.crossing_count());
      StateComplex sc = apply_state(d, s);
      auto verdict = eval.evaluate(s);
      CHECK(verdict.circle_count == sc.circle_count());
      CHECK(verdict.adequate == is_adequate(sc));
      CHECK(verdict.homogeneous == is_homogeneous(sc));
    }
  }
}

TEST_CASE("mirror duality: dual state on the mirror gives the same splice") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    LinkDiagram d = random_diagram(rng);
    LinkDiagram m = mirror(d);
    KauffmanState s = random_state(rng, d.crossing_count());
    StateComplex sc = apply_state(d, s);
    StateComplex scm = apply_state(m, s.dual());
    CHECK(sc.circle_count() == scm.circle_count());
    CHECK(is_adequate(sc) == is_adequate(scm));
    CHECK(is_homogeneous(sc) == is_homogeneous(scm));
    // the region partitions agree as partitions of the crossing set
    std::map<int, std::vector<int>> parts_d, parts_m;
    for (int c = 0; c < d.crossing_count(); ++c) {
      parts_d[sc.region_of_segment[c]].push_back(c);
      parts_m[scm.region_of_segment[c]].push_back(c);
    }
    std::vector<std::vector<int>> pd, pm;
    for (auto& [_, v] : parts_d) pd.push_back(v);
    for (auto& [_, v] : parts_m) pm.push_back(v);
    std::sort(pd.begin(), pd.end());
    std::sort(pm.begin(), pm.end());
    CHECK(pd == pm);
  }
}
