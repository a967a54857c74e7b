#pragma once

#include <string>

#include "statesurf/errors.hpp"
#include "statesurf/kauffman.hpp"
#include "statesurf/link_diagram.hpp"
#include "statesurf/polyhedra.hpp"
#include "statesurf/state_graphs.hpp"
#include "statesurf/union_find.hpp"

namespace statesurf {

// Invariants of the state surface: disks bounded by the state circles joined
// by a half-twisted band at every crossing.
struct SurfaceReport {
  int chi = 0;
  int boundary_components = 0;
  bool orientable = false;
  int genus = 0;     // meaningful when orientable
  int crosscap = 0;  // meaningful when non-orientable
};

// The state surface is orientable exactly when some orientation of the link
// makes sigma the oriented resolution at every crossing.  Decided by a
// parity-consistency system over the components.
inline bool is_orientable(const LinkDiagram& d, const KauffmanState& sigma) {
  if (d.is_round_unknot()) return true;
  ParityUnionFind parity(d.component_count());
  for (int c = 0; c < d.crossing_count(); ++c) {
    int d0 = LinkDiagram::dart(c, 0), d3 = LinkDiagram::dart(c, 3);
    int under = d.component_of_arc(d.arc_of_dart(d0));
    int over = d.component_of_arc(d.arc_of_dart(d3));
    uint8_t ref_eq = d.ref_in(d0) == d.ref_in(d3) ? 1 : 0;
    uint8_t want_a = sigma.choice[c] == Resolution::A ? 1 : 0;
    if (!parity.unite(under, over, ref_eq ^ want_a)) return false;
  }
  return true;
}

inline SurfaceReport surface_invariants(const StateComplex& sc, const LinkDiagram& d) {
  SurfaceReport r;
  r.chi = sc.circle_count() - sc.crossing_count;
  r.boundary_components = d.component_count();
  r.orientable = is_orientable(d, sc.state);
  int defect = 2 - r.chi - r.boundary_components;
  if (r.orientable) {
    require(defect >= 0 && defect % 2 == 0, ErrorCode::InternalInvariant,
            "orientable surface with non-integral genus");
    r.genus = defect / 2;
  } else {
    require(defect >= 1, ErrorCode::InternalInvariant, "non-orientable surface needs crosscaps");
    r.crosscap = defect;
  }
  return r;
}

enum class GeometricType { Fiber, QuasifuchsianIfHyperbolic, HypothesesNotMet };

inline const char* geometric_type_name(GeometricType t) {
  switch (t) {
    case GeometricType::Fiber: return "Fiber";
    case GeometricType::QuasifuchsianIfHyperbolic: return "QuasifuchsianIfHyperbolic";
    case GeometricType::HypothesesNotMet: return "HypothesesNotMet";
  }
  return "?";
}

enum class AccidentalVerdict { Never, Unknown };

struct ClassificationReport {
  struct Hypotheses {
    bool prime = false;
    bool adequate = false;
    bool homogeneous = false;
    bool all() const { return prime && adequate && homogeneous; }
  } hypotheses;

  bool essential = false;  // theorem-backed when the hypotheses hold
  AccidentalVerdict accidental = AccidentalVerdict::Unknown;
  bool fiber = false;
  bool semi_fiber = false;  // equals fiber
  GeometricType geometric_type = GeometricType::HypothesesNotMet;
  bool torus_link_flag = false;  // standard (2,q) pattern, hence not hyperbolic

  SurfaceReport surface;
  int circle_count = 0;
  int stable_coefficient = -1;  // 1 - chi(G'_sigma) when adequate
};

// Classification of the state surface geometry: with a prime diagram and an
// adequate homogeneous state, the surface is essential and non-accidental,
// and it fibers exactly when the reduced state graph is a tree.  The
// conditional quasifuchsian verdict is accompanied by a flag for the (2,q)
// torus pattern, the one family the dichotomy excludes.
inline ClassificationReport classify(const LinkDiagram& d, const KauffmanState& sigma) {
  ClassificationReport r;
  if (d.is_round_unknot()) {
    r.hypotheses = {true, true, true};
    r.essential = true;
    r.accidental = AccidentalVerdict::Never;
    r.fiber = r.semi_fiber = true;
    r.geometric_type = GeometricType::Fiber;
    r.surface = {1, 1, true, 0, 0};
    r.circle_count = 1;
    r.stable_coefficient = 0;
    return r;
  }

  StateComplex sc = apply_state(d, sigma);
  r.hypotheses.prime = is_prime(d);
  r.hypotheses.adequate = is_adequate(sc);
  r.hypotheses.homogeneous = is_homogeneous(sc);
  r.surface = surface_invariants(sc, d);
  r.circle_count = sc.circle_count();

  if (r.hypotheses.adequate) {
    ReducedStateGraph reduced = reduce(build_state_graph(sc));
    r.stable_coefficient = stable_coefficient(reduced);
    if (r.hypotheses.all()) {
      r.essential = true;
      r.accidental = AccidentalVerdict::Never;
      r.fiber = r.semi_fiber = is_tree(reduced);
      r.geometric_type = r.fiber ? GeometricType::Fiber : GeometricType::QuasifuchsianIfHyperbolic;
      std::vector<PolyhedralRegion> regions = decompose_regions(sc, maximal_nonprime_arcs(sc));
      if (regions.size() == 1)
        r.torus_link_flag = skeleton_is_2q_pattern(lower_skeleton(regions.front()));
    }
  }
  return r;
}

}  // namespace statesurf
