#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "statesurf/kauffman.hpp"
#include "statesurf/laurent.hpp"
#include "statesurf/link_diagram.hpp"
#include "statesurf/parallel.hpp"
#include "statesurf/state_graphs.hpp"

namespace statesurf {

inline constexpr int kDefaultCrossingCap = 24;

// <D> = sum over all 2^c states of A^(a-b) * (-A^2 - A^-2)^(|s_sigma| - 1).
// The state space is split into fixed blocks and accumulated in block order,
// so the result is bit-identical for any worker count.
inline LaurentPolynomial kauffman_bracket(const LinkDiagram& d, int threads = 1,
                                          int crossing_cap = kDefaultCrossingCap) {
  if (d.is_round_unknot()) return LaurentPolynomial::one();
  const int c = d.crossing_count();
  require(c <= crossing_cap, ErrorCode::TooManyCrossings,
          "bracket state sum capped at " + std::to_string(crossing_cap) + " crossings");

  LaurentPolynomial delta;
  delta.add_term(2, -1);
  delta.add_term(-2, -1);
  std::vector<LaurentPolynomial> delta_pow(c + 2);
  delta_pow[0] = LaurentPolynomial::one();
  for (int i = 1; i <= c + 1; ++i) delta_pow[i] = delta_pow[i - 1] * delta;

  const int block_bits = c > 12 ? c - 12 : 0;
  const int blocks = 1 << block_bits;
  const uint64_t per_block = uint64_t(1) << (c - block_bits);

  auto sum_block = [&](int block) {
    FastStateEvaluator eval(d);
    // Term multiplicity per (circle count, a - b exponent); exponents offset by c.
    std::vector<std::vector<BigInt>> coeff(c + 2, std::vector<BigInt>(2 * c + 1, 0));
    for (uint64_t lo = 0; lo < per_block; ++lo) {
      uint64_t mask = (uint64_t(block) << (c - block_bits)) | lo;
      KauffmanState s = KauffmanState::from_mask(c, mask);
      int b = __builtin_popcountll(mask);
      int circles = eval.circle_count(s);
      coeff[circles][(c - 2 * b) + c] += 1;
    }
    LaurentPolynomial out;
    for (int circles = 1; circles <= c + 1; ++circles)
      for (int e = 0; e <= 2 * c; ++e)
        if (coeff[circles][e] != 0)
          out += delta_pow[circles - 1] * LaurentPolynomial::monomial(coeff[circles][e], e - c);
    return out;
  };

  auto partials = run_blocks<LaurentPolynomial>(blocks, threads, sum_block);
  LaurentPolynomial total;
  for (const auto& p : partials) total += p;
  return total;
}

// (-A)^(-3w) <D> with t = A^-4, kept in the A-variable representation.
inline LaurentPolynomial jones_in_A(const LinkDiagram& d, const Orientation& o, int threads = 1,
                                    int crossing_cap = kDefaultCrossingCap) {
  LaurentPolynomial bracket = kauffman_bracket(d, threads, crossing_cap);
  if (d.is_round_unknot()) return bracket;
  int w = writhe(d, o);
  return bracket * LaurentPolynomial::monomial(w % 2 == 0 ? 1 : -1, -3 * w);
}

inline std::vector<JonesTerm> jones(const LinkDiagram& d, const Orientation& o, int threads = 1,
                                    int crossing_cap = kDefaultCrossingCap) {
  return as_t_polynomial(jones_in_A(d, o, threads, crossing_cap));
}

// Which Jones end a state-sum extreme controls: the all-A state dominates the
// highest A-exponent of the bracket, hence the lowest t-degree; all-B the
// highest t-degree.  Fixed once against the trefoil and figure-eight and
// asserted corpus-wide by the tests.
struct ExtremeCoefficientReport {
  Resolution side = Resolution::A;
  std::string jones_end;  // "lowest-t" or "highest-t"
  BigInt extreme_coefficient;
  BigInt adjacent_coefficient;
  int stable_coefficient = 0;
  bool extreme_is_unit = false;
  bool adjacent_matches = false;
  bool pass = false;
};

inline ExtremeCoefficientReport extreme_coefficient_check(const LinkDiagram& d, Resolution side,
                                                          int threads = 1,
                                                          int crossing_cap = kDefaultCrossingCap) {
  const int c = d.crossing_count();
  KauffmanState s = side == Resolution::A ? KauffmanState::all_A(c) : KauffmanState::all_B(c);
  StateComplex sc = apply_state(d, s);
  require(is_adequate(sc), ErrorCode::InadequateState,
          std::string("diagram is not ") + resolution_char(side) + std::string("-adequate"));
  ReducedStateGraph reduced = reduce(build_state_graph(sc));

  ExtremeCoefficientReport r;
  r.side = side;
  r.stable_coefficient = stable_coefficient(reduced);
  LaurentPolynomial bracket = kauffman_bracket(d, threads, crossing_cap);
  if (side == Resolution::A) {
    r.jones_end = "lowest-t";
    int top = bracket.max_exponent();
    r.extreme_coefficient = bracket.coefficient(top);
    r.adjacent_coefficient = bracket.coefficient(top - 4);
  } else {
    r.jones_end = "highest-t";
    int bottom = bracket.min_exponent();
    r.extreme_coefficient = bracket.coefficient(bottom);
    r.adjacent_coefficient = bracket.coefficient(bottom + 4);
  }
  r.extreme_is_unit = abs(r.extreme_coefficient) == 1;
  r.adjacent_matches = abs(r.adjacent_coefficient) == r.stable_coefficient;
  r.pass = r.extreme_is_unit && r.adjacent_matches;
  return r;
}

}  // namespace statesurf
