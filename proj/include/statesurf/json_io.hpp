#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "statesurf/jones.hpp"
#include "statesurf/kauffman.hpp"
#include "statesurf/link_diagram.hpp"
#include "statesurf/polyhedra.hpp"
#include "statesurf/search.hpp"
#include "statesurf/state_graphs.hpp"
#include "statesurf/surface.hpp"

namespace statesurf {

using Json = nlohmann::ordered_json;

inline Json diagram_to_json(const LinkDiagram& d) {
  Json j;
  j["crossings"] = Json::array();
  for (const auto& cr : d.crossings()) j["crossings"].push_back({cr.arcs[0], cr.arcs[1], cr.arcs[2], cr.arcs[3]});
  j["crossing_count"] = d.crossing_count();
  j["component_count"] = d.component_count();
  Json comps = Json::array();
  for (int k = 0; k < d.component_count(); ++k) {
    Json arcs = Json::array();
    for (int a = 0; a < d.arc_count(); ++a)
      if (d.component_of_arc(a) == k) arcs.push_back(d.arc_label(a));
    comps.push_back(arcs);
  }
  j["components"] = comps;
  j["pd"] = d.is_round_unknot() ? "" : emit_pd(d);
  j["round_unknot"] = d.is_round_unknot();
  return j;
}

inline std::string state_to_string(const KauffmanState& s) {
  std::string out;
  for (Resolution r : s.choice) out += resolution_char(r);
  return out;
}

inline Json state_complex_to_json(const StateComplex& sc, const LinkDiagram& d) {
  Json j;
  j["state"] = state_to_string(sc.state);
  j["state_mask"] = sc.state.mask();
  j["circle_count"] = sc.circle_count();
  Json circles = Json::array();
  for (const auto& c : sc.circles) {
    Json pieces = Json::array();
    for (int arc : c.arcs) pieces.push_back(arc < 0 ? -1 : d.arc_label(arc));
    circles.push_back(pieces);
  }
  j["circles"] = circles;
  Json segments = Json::array();
  for (int c = 0; c < sc.crossing_count; ++c) {
    segments.push_back({{"crossing", c},
                        {"label", std::string(1, resolution_char(sc.segment_label(c)))},
                        {"circle_u", sc.segment_circle_u(c)},
                        {"circle_v", sc.segment_circle_v(c)},
                        {"region", sc.region_of_segment[c]}});
  }
  j["segments"] = segments;
  j["adequate"] = is_adequate(sc);
  j["homogeneous"] = is_homogeneous(sc);
  Json regions = Json::array();
  for (const auto& part : complementary_regions(sc)) regions.push_back(part);
  j["segment_regions"] = regions;
  return j;
}

inline Json graphs_to_json(const StateComplex& sc) {
  Json j;
  StateGraph g = build_state_graph(sc);
  j["vertices"] = g.vertex_count;
  Json edges = Json::array();
  for (const auto& e : g.edges)
    edges.push_back({{"u", e.u}, {"v", e.v}, {"segment", e.segment},
                     {"label", std::string(1, resolution_char(e.label))}});
  j["edges"] = edges;
  j["has_loop"] = g.has_loop();
  if (!g.has_loop()) {
    ReducedStateGraph r = reduce(g);
    Json redges = Json::array();
    for (const auto& e : r.edges)
      redges.push_back({{"u", e.u}, {"v", e.v}, {"multiplicity", e.multiplicity}});
    j["reduced"] = {{"vertices", r.vertex_count},
                    {"edges", redges},
                    {"euler_characteristic", r.euler_characteristic()},
                    {"tree", is_tree(r)},
                    {"stable_coefficient", stable_coefficient(r)}};
  }
  return j;
}

inline Json jones_to_json(const LaurentPolynomial& in_A) {
  Json j;
  j["text"] = jones_text(in_A);
  Json terms = Json::array();
  for (const auto& term : as_t_polynomial(in_A))
    terms.push_back({term.t_exponent.to_string(), term.coefficient.str()});
  j["terms"] = terms;
  j["bracket_text"] = bracket_text(in_A);
  return j;
}

inline Json surface_to_json(const SurfaceReport& s) {
  Json j;
  j["chi"] = s.chi;
  j["boundary_components"] = s.boundary_components;
  j["orientable"] = s.orientable;
  if (s.orientable)
    j["genus"] = s.genus;
  else
    j["crosscap"] = s.crosscap;
  return j;
}

inline Json classification_to_json(const ClassificationReport& r) {
  Json j;
  j["hypotheses"] = {{"prime", r.hypotheses.prime},
                     {"adequate", r.hypotheses.adequate},
                     {"homogeneous", r.hypotheses.homogeneous}};
  j["essential"] = {{"value", r.essential},
                    {"justified_by", r.essential ? "essentiality of adequate homogeneous state surfaces"
                                                 : "hypotheses not met"}};
  j["accidental"] = {{"value", r.accidental == AccidentalVerdict::Never ? "never" : "unknown"},
                     {"justified_by", r.accidental == AccidentalVerdict::Never
                                          ? "no accidental parabolics on prime adequate homogeneous diagrams"
                                          : "hypotheses not met"}};
  j["fiber"] = {{"value", r.fiber}, {"justified_by", "tree test on the reduced state graph"}};
  j["semi_fiber"] = r.semi_fiber;
  j["geometric_type"] = geometric_type_name(r.geometric_type);
  j["torus_link_flag"] = r.torus_link_flag;
  j["surface"] = surface_to_json(r.surface);
  j["circle_count"] = r.circle_count;
  if (r.stable_coefficient >= 0) j["stable_coefficient"] = r.stable_coefficient;
  return j;
}

inline Json search_to_json(const SearchResult& r) {
  Json j;
  if (!r.diagram_id.empty()) j["diagram"] = r.diagram_id;
  j["total_examined"] = r.total_examined;
  j["adequate_count"] = r.adequate_count;
  j["homogeneous_count"] = r.homogeneous_count;
  j["homogeneously_adequate_count"] = r.homogeneously_adequate_count;
  j["truncated"] = r.truncated;
  Json found = Json::array();
  for (const auto& v : r.found) {
    Json e = {{"mask", v.mask},
              {"circles", v.circle_count},
              {"adequate", v.adequate},
              {"homogeneous", v.homogeneous}};
    if (!v.role.empty()) e["role"] = v.role;
    found.push_back(e);
  }
  j["found"] = found;
  return j;
}

inline Json map_to_json(const CombinatorialMap& m) {
  Json j;
  Json sigma = Json::array(), alpha = Json::array();
  for (int d = 0; d < m.dart_count(); ++d) {
    sigma.push_back(m.sigma(d));
    alpha.push_back(m.alpha(d));
  }
  j["darts"] = m.dart_count();
  j["rotation"] = sigma;
  j["pairing"] = alpha;
  j["vertices"] = m.vertex_count();
  j["edges"] = m.edge_count();
  j["faces"] = m.face_count();
  return j;
}

inline Json polyhedra_to_json(const std::vector<NonPrimeArc>& arcs,
                              const std::vector<PolyhedralRegion>& regions,
                              const PolyhedralClaimsReport& claims) {
  Json j;
  Json arcs_json = Json::array();
  for (const auto& a : arcs)
    arcs_json.push_back({{"circle", a.circle},
                         {"gap_a", a.gap_a},
                         {"gap_b", a.gap_b},
                         {"region", a.region}});
  j["nonprime_arcs"] = arcs_json;
  Json regions_json = Json::array();
  for (const auto& r : regions) {
    LowerPolyhedron poly = lower_skeleton(r, /*check_prime=*/false);
    Json shaded = Json::array();
    for (uint8_t s : poly.face_shaded) shaded.push_back(static_cast<bool>(s));
    regions_json.push_back({{"id", r.id},
                            {"label", std::string(1, resolution_char(r.label))},
                            {"segments", r.segments},
                            {"skeleton", map_to_json(poly.skeleton)},
                            {"face_shaded", shaded}});
  }
  j["regions"] = regions_json;
  Json rows = Json::array();
  for (const auto& c : claims.polyhedra)
    rows.push_back({{"region", c.region_id},
                    {"vertices", c.vertices},
                    {"four_valent", c.four_valent},
                    {"euler", c.euler},
                    {"checkerboard", c.checkerboard},
                    {"prime", c.prime}});
  j["claims"] = {{"hypotheses_met", claims.hypotheses_met},
                 {"segments_partitioned", claims.segments_partitioned},
                 {"white_faces_match", claims.white_faces_match},
                 {"region_count", claims.region_count},
                 {"arc_count", claims.arc_count},
                 {"polyhedra", rows},
                 {"all_pass", claims.all_pass()}};
  return j;
}

}  // namespace statesurf
