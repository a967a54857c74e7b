#pragma once

#include <random>
#include <string>
#include <vector>

#include "statesurf/jones.hpp"
#include "statesurf/kauffman.hpp"
#include "statesurf/link_diagram.hpp"
#include "statesurf/union_find.hpp"

namespace testutil {

using namespace statesurf;

// Canonical small diagrams.  The right-handed trefoil is the closure of
// sigma_1^3; the left-handed PD is the usual table form.
inline LinkDiagram right_trefoil() { return braid_closure({2, {1, 1, 1}}); }
inline LinkDiagram left_trefoil_pd() { return parse_pd("X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]"); }
inline LinkDiagram figure_eight() { return braid_closure({3, {1, -2, 1, -2}}); }
inline LinkDiagram figure_eight_pd() {
  return parse_pd("X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]");
}
inline LinkDiagram positive_kink() { return braid_closure({2, {1}}); }
inline LinkDiagram negative_kink() { return braid_closure({2, {-1}}); }
inline LinkDiagram torus_2q(int q) { return braid_closure({2, std::vector<int>(q, 1)}); }
inline LinkDiagram hopf_link() { return torus_2q(2); }
inline LinkDiagram knot_12n0873() {
  return braid_closure({5, {1, 2, -3, -4, 2, -3, 1, 2, -3, 2, -4, -3}});
}

// Connected sum along one arc of each diagram, spliced at the PD level.
inline LinkDiagram connected_sum(const LinkDiagram& a, const LinkDiagram& b) {
  std::vector<Crossing> crossings = a.crossings();
  int shift = 0;
  for (const auto& cr : a.crossings())
    for (int arc : cr.arcs) shift = std::max(shift, arc);
  for (const auto& cr : b.crossings()) {
    Crossing moved;
    for (int p = 0; p < 4; ++p) moved.arcs[p] = cr.arcs[p] + shift;
    crossings.push_back(moved);
  }
  int arc_a = a.arc_label(0);
  int arc_b = b.arc_label(0) + shift;
  int fresh1 = shift + 4 * b.crossing_count() + 1;
  int fresh2 = fresh1 + 1;
  bool first_a = true, first_b = true;
  for (auto& cr : crossings) {
    for (int p = 0; p < 4; ++p) {
      if (cr.arcs[p] == arc_a) {
        cr.arcs[p] = first_a ? fresh1 : fresh2;
        first_a = false;
      } else if (cr.arcs[p] == arc_b) {
        cr.arcs[p] = first_b ? fresh2 : fresh1;
        first_b = false;
      }
    }
  }
  return LinkDiagram::from_crossings(std::move(crossings));
}

// Independent Kauffman-bracket oracle: recursively resolve the first
// remaining crossing by the skein relation, counting each circle as the join
// that closes it.
inline LaurentPolynomial bracket_oracle(const LinkDiagram& d) {
  if (d.is_round_unknot()) return LaurentPolynomial::one();
  const int c = d.crossing_count();
  LaurentPolynomial delta;
  delta.add_term(2, -1);
  delta.add_term(-2, -1);

  UnionFind initial(4 * c);
  for (int a = 0; a < d.arc_count(); ++a) {
    const auto& e = d.arc_darts(a);
    initial.unite(e[0], e[1]);
  }

  LaurentPolynomial total;
  struct Frame {
    UnionFind uf;
    int crossing;
    int exponent;  // a - b so far
    int loops;
  };
  std::vector<Frame> stack;
  stack.push_back({initial, 0, 0, 0});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.crossing == c) {
      total += pow(delta, f.loops - 1).shifted(f.exponent);
      continue;
    }
    for (int which = 0; which < 2; ++which) {
      Frame next{f.uf, f.crossing + 1, f.exponent + (which == 0 ? 1 : -1), f.loops};
      int first = which == 0 ? 0 : 1;
      for (int pair = 0; pair < 2; ++pair) {
        int x = 4 * f.crossing + (first + 2 * pair) % 4;
        int y = 4 * f.crossing + (first + 2 * pair + 1) % 4;
        if (!next.uf.unite(x, y)) ++next.loops;
      }
      stack.push_back(std::move(next));
    }
  }
  return total;
}

// Random connected braid-closure diagrams for the property suites.
inline LinkDiagram random_diagram(std::mt19937& rng, int max_strands = 5, int max_letters = 12) {
  for (;;) {
    std::uniform_int_distribution<int> strands_dist(2, max_strands);
    int n = strands_dist(rng);
    std::uniform_int_distribution<int> len_dist(n, max_letters);
    int len = len_dist(rng);
    std::vector<int> letters;
    for (int i = 0; i < n - 1; ++i) letters.push_back(i + 1);  // touch every column
    std::uniform_int_distribution<int> letter_dist(1, n - 1);
    std::uniform_int_distribution<int> sign_dist(0, 1);
    while (static_cast<int>(letters.size()) < len)
      letters.push_back(letter_dist(rng) * (sign_dist(rng) ? 1 : -1));
    std::shuffle(letters.begin(), letters.end(), rng);
    for (auto& w : letters)
      if (sign_dist(rng)) w = -w;
    try {
      return braid_closure({n, letters});
    } catch (const Error&) {
      continue;
    }
  }
}

inline KauffmanState random_state(std::mt19937& rng, int crossings) {
  std::uniform_int_distribution<uint64_t> dist(0, crossings >= 64
                                                      ? ~uint64_t(0)
                                                      : (uint64_t(1) << crossings) - 1);
  return KauffmanState::from_mask(crossings, dist(rng));
}

}  // namespace testutil
