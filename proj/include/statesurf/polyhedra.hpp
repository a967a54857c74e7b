#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <vector>

#include "statesurf/combinatorial_map.hpp"
#include "statesurf/errors.hpp"
#include "statesurf/kauffman.hpp"
#include "statesurf/link_diagram.hpp"
#include "statesurf/union_find.hpp"

namespace statesurf {

// An arc with both endpoints on one state circle, splitting the crossing-
// bearing structure on its side of the circle into two nonempty parts.
// Its endpoints sit in two attachment gaps of the circle; the side is the
// complementary region the arc runs through.
struct NonPrimeArc {
  int circle = 0;
  int gap_a = 0, gap_b = 0;  // positions in the circle's cyclic attachment order
  int region = 0;            // complementary-region id (side indicator)
  int h_edge_a = -1, h_edge_b = -1;  // H-edges carrying the endpoints
  int h_face = -1;                   // H-face the arc crosses
};

struct RegionAttachment {
  int segment = 0;   // crossing id
  int endpoint = 0;  // 0 = first smoothing arc (vertex u), 1 = second (vertex v)
};

// A crossing-bearing region of the complement of the state circles and the
// chosen non-prime arcs.  Boundary curves are cyclic attachment sequences;
// pieces of non-prime arcs behave like pieces of state circle in them.
struct PolyhedralRegion {
  int id = 0;
  Resolution label = Resolution::A;
  std::vector<int> segments;
  std::vector<std::vector<RegionAttachment>> boundary_curves;
};

// The 4-valent skeleton of one lower polyhedron with its checkerboard
// coloring.  Shaded faces run along the region's boundary curves (they lie
// on the state surface); white faces are glued to the upper polyhedron.
struct LowerPolyhedron {
  CombinatorialMap skeleton;
  std::vector<int> segment_of_vertex;
  std::vector<uint8_t> face_shaded;  // per skeleton face
  int shaded_count = 0;
  int white_count = 0;
};

namespace detail {

// H_sigma with the non-prime arcs drawn in: arc endpoints subdivide the gap
// edges they land on and each arc becomes a chord edge across its face.
struct CutComplex {
  enum Kind : uint8_t { kCircle = 0, kSegment = 1, kChord = 2 };

  std::vector<int> sigma, alpha;
  std::vector<uint8_t> kind;
  std::vector<int> orig_edge;   // circle darts: H-edge they descend from
  std::vector<int> side_token;  // circle darts: original H-face on their side
  int crossing_count = 0;
  bool ok = true;

  CombinatorialMap map;                   // valid when ok
  std::vector<int> piece_of_face;         // -1 for segment-free classes
  std::vector<std::vector<int>> piece_segments;
  int piece_count = 0;

  int segment_of_dart(int d) const { return d / 6; }
  int endpoint_of_dart(int d) const { return d % 6 == 0 ? 0 : 1; }

  // Face-walk step of the complex with segment edges removed; crossings of
  // segments are reported as attachments.
  int next_boundary(int t, std::vector<RegionAttachment>* rec) const {
    int x = sigma[alpha[t]];
    while (kind[x] == kSegment) {
      if (rec) rec->push_back({segment_of_dart(x), endpoint_of_dart(x)});
      x = sigma[x];
    }
    return x;
  }
};

inline std::vector<int> face_labels(const std::vector<int>& sigma, const std::vector<int>& alpha) {
  std::vector<int> face(sigma.size(), -1);
  int next = 0;
  for (std::size_t d = 0; d < sigma.size(); ++d) {
    if (face[d] >= 0) continue;
    int cur = static_cast<int>(d);
    while (face[cur] < 0) {
      face[cur] = next;
      cur = sigma[alpha[cur]];
    }
    ++next;
  }
  return face;
}

inline CutComplex build_cut_complex(const StateComplex& sc, const std::vector<NonPrimeArc>& arcs) {
  CutComplex cx;
  cx.crossing_count = sc.crossing_count;
  const int n0 = sc.h_map.dart_count();
  cx.sigma.resize(n0);
  cx.alpha.resize(n0);
  cx.kind.resize(n0);
  cx.orig_edge.assign(n0, -1);
  cx.side_token.assign(n0, -1);
  for (int d = 0; d < n0; ++d) {
    cx.sigma[d] = sc.h_map.sigma(d);
    cx.alpha[d] = sc.h_map.alpha(d);
    bool segment = d % 6 == 0 || d % 6 == 3;
    cx.kind[d] = segment ? CutComplex::kSegment : CutComplex::kCircle;
    if (!segment) {
      cx.orig_edge[d] = sc.h_map.edge_of(d);
      cx.side_token[d] = sc.h_map.face_of(d);
    }
  }

  for (const auto& arc : arcs) {
    std::vector<int> faces = face_labels(cx.sigma, cx.alpha);
    auto candidates = [&](int edge) {
      std::vector<int> out;
      for (int d = 0; d < static_cast<int>(cx.sigma.size()); ++d)
        if (cx.kind[d] == CutComplex::kCircle && cx.orig_edge[d] == edge &&
            cx.side_token[d] == arc.h_face)
          out.push_back(d);
      return out;
    };
    int da = -1, db = -1;
    for (int a : candidates(arc.h_edge_a)) {
      for (int b : candidates(arc.h_edge_b)) {
        if (faces[a] != faces[b]) continue;
        if (da < 0 || std::pair(a, b) < std::pair(da, db)) {
          da = a;
          db = b;
        }
      }
    }
    if (da < 0) {
      cx.ok = false;
      return cx;
    }

    auto subdivide = [&](int x) {
      int y = cx.alpha[x];
      int p = static_cast<int>(cx.sigma.size());
      int q = p + 1;
      cx.sigma.push_back(q);  // rotation at the new 2-valent vertex: (p q)
      cx.sigma.push_back(p);
      cx.alpha.push_back(x);
      cx.alpha.push_back(y);
      cx.alpha[x] = p;
      cx.alpha[y] = q;
      cx.kind.push_back(CutComplex::kCircle);
      cx.kind.push_back(CutComplex::kCircle);
      cx.orig_edge.push_back(cx.orig_edge[x]);
      cx.orig_edge.push_back(cx.orig_edge[x]);
      cx.side_token.push_back(cx.side_token[y]);  // p lies on y's side
      cx.side_token.push_back(cx.side_token[x]);  // q lies on x's side
      return std::pair(p, q);
    };
    auto [p1, q1] = subdivide(da);
    auto [p2, q2] = subdivide(db);
    int r1 = static_cast<int>(cx.sigma.size());
    int r2 = r1 + 1;
    // The chord enters the corner between p and q, which lies on the side of
    // the chosen darts.
    cx.sigma.push_back(q1);
    cx.sigma.push_back(q2);
    cx.sigma[p1] = r1;
    cx.sigma[p2] = r2;
    cx.alpha.push_back(r2);
    cx.alpha.push_back(r1);
    cx.kind.push_back(CutComplex::kChord);
    cx.kind.push_back(CutComplex::kChord);
    cx.orig_edge.push_back(-1);
    cx.orig_edge.push_back(-1);
    cx.side_token.push_back(-1);
    cx.side_token.push_back(-1);
  }

  cx.map = CombinatorialMap(cx.sigma, cx.alpha);
  cx.map.validate();
  require(cx.map.is_planar_connected(), ErrorCode::InternalInvariant,
          "cut complex must stay planar and connected");

  UnionFind merge(cx.map.face_count());
  for (int c = 0; c < cx.crossing_count; ++c)
    merge.unite(cx.map.face_of(6 * c), cx.map.face_of(6 * c + 3));
  cx.piece_of_face.assign(cx.map.face_count(), -1);
  std::vector<int> piece_of_root(cx.map.face_count(), -1);
  for (int c = 0; c < cx.crossing_count; ++c) {
    int root = merge.find(cx.map.face_of(6 * c));
    if (piece_of_root[root] < 0) {
      piece_of_root[root] = cx.piece_count++;
      cx.piece_segments.emplace_back();
    }
    cx.piece_segments[piece_of_root[root]].push_back(c);
  }
  for (int f = 0; f < cx.map.face_count(); ++f) cx.piece_of_face[f] = piece_of_root[merge.find(f)];
  return cx;
}

inline std::vector<std::vector<RegionAttachment>> trace_boundary_curves(const CutComplex& cx,
                                                                        int piece) {
  std::vector<std::vector<RegionAttachment>> curves;
  std::vector<char> visited(cx.sigma.size(), 0);
  for (int d0 = 0; d0 < static_cast<int>(cx.sigma.size()); ++d0) {
    if (visited[d0] || cx.kind[d0] == CutComplex::kSegment) continue;
    if (cx.piece_of_face[cx.map.face_of(d0)] != piece) continue;
    std::vector<RegionAttachment> curve;
    int t = d0;
    do {
      visited[t] = 1;
      t = cx.next_boundary(t, &curve);
    } while (t != d0);
    curves.push_back(std::move(curve));
  }
  return curves;
}

}  // namespace detail

// Cut the sphere along the state circles and the given arcs; the regions
// containing segments are the polyhedral regions.
inline std::vector<PolyhedralRegion> decompose_regions(const StateComplex& sc,
                                                       const std::vector<NonPrimeArc>& arcs) {
  if (sc.round_unknot) return {};
  detail::CutComplex cx = detail::build_cut_complex(sc, arcs);
  require(cx.ok, ErrorCode::InternalInvariant, "non-prime arcs could not be drawn disjointly");
  std::vector<PolyhedralRegion> regions;
  for (int p = 0; p < cx.piece_count; ++p) {
    PolyhedralRegion region;
    region.id = p;
    region.segments = cx.piece_segments[p];
    region.label = sc.state.choice[region.segments.front()];
    region.boundary_curves = detail::trace_boundary_curves(cx, p);
    regions.push_back(std::move(region));
  }
  return regions;
}

// Rebuild the prime alternating sub-diagram of a polyhedral region: one
// 4-valent vertex per segment, edges following the boundary curves.
inline LowerPolyhedron lower_skeleton(const PolyhedralRegion& region, bool check_prime = true) {
  const int k = static_cast<int>(region.segments.size());
  require(k > 0, ErrorCode::InternalInvariant, "a polyhedral region must contain segments");
  std::map<int, int> index_of;
  for (int i = 0; i < k; ++i) index_of[region.segments[i]] = i;

  // Darts per vertex: 0 toward the previous attachment at endpoint u, 1 toward
  // the next, 2 and 3 the same at endpoint v; rotation (0 1 2 3).
  std::vector<int> sigma(4 * k), alpha(4 * k, -1);
  for (int i = 0; i < k; ++i)
    for (int p = 0; p < 4; ++p) sigma[4 * i + p] = 4 * i + (p + 1) % 4;
  auto prev_dart = [&](const RegionAttachment& a) {
    return 4 * index_of.at(a.segment) + (a.endpoint == 0 ? 0 : 2);
  };
  auto next_dart = [&](const RegionAttachment& a) {
    return 4 * index_of.at(a.segment) + (a.endpoint == 0 ? 1 : 3);
  };
  for (const auto& curve : region.boundary_curves) {
    require(!curve.empty(), ErrorCode::RegionNotPrime,
            "boundary curve without attachments in a polyhedral region");
    const int m = static_cast<int>(curve.size());
    for (int j = 0; j < m; ++j) {
      int a = next_dart(curve[j]);
      int b = prev_dart(curve[(j + 1) % m]);
      require(alpha[a] < 0 && alpha[b] < 0, ErrorCode::InternalInvariant,
              "attachment used twice while building a skeleton");
      alpha[a] = b;
      alpha[b] = a;
    }
  }
  for (int d = 0; d < 4 * k; ++d)
    require(alpha[d] >= 0, ErrorCode::InternalInvariant, "skeleton has unmatched darts");

  LowerPolyhedron poly;
  poly.skeleton = CombinatorialMap(std::move(sigma), std::move(alpha));
  poly.skeleton.validate();
  require(poly.skeleton.is_planar_connected(), ErrorCode::RegionNotPrime,
          "skeleton of a polyhedral region must be a planar connected map");
  poly.segment_of_vertex.resize(k);
  for (int i = 0; i < k; ++i) poly.segment_of_vertex[poly.skeleton.vertex_of(4 * i)] = region.segments[i];

  // Shaded faces are the ones beyond the boundary curves (the state-circle
  // side); each curve contributes exactly one.
  poly.face_shaded.assign(poly.skeleton.face_count(), 0);
  for (const auto& curve : region.boundary_curves) {
    int f = poly.skeleton.face_of(next_dart(curve.front()));
    for (const auto& a : curve)
      require(poly.skeleton.face_of(next_dart(a)) == f, ErrorCode::InternalInvariant,
              "boundary curve does not bound a single skeleton face");
    require(!poly.face_shaded[f], ErrorCode::InternalInvariant,
            "two boundary curves share a skeleton face");
    poly.face_shaded[f] = 1;
  }
  for (uint8_t s : poly.face_shaded) poly.shaded_count += s;
  poly.white_count = poly.skeleton.face_count() - poly.shaded_count;

  if (check_prime)
    require(map_is_prime_4valent(poly.skeleton), ErrorCode::RegionNotPrime,
            "polyhedral region yields a non-prime sub-diagram");
  return poly;
}

// The standard (2,q) pattern: q vertices, q bigons and two q-gon faces.
inline bool skeleton_is_2q_pattern(const LowerPolyhedron& poly) {
  const int v = poly.skeleton.vertex_count();
  if (v < 2 || poly.skeleton.face_count() != v + 2) return false;
  std::vector<int> degrees;
  for (int f = 0; f < poly.skeleton.face_count(); ++f) degrees.push_back(poly.skeleton.face_degree(f));
  std::sort(degrees.begin(), degrees.end());
  std::vector<int> expected(v, 2);
  expected.push_back(v);
  expected.push_back(v);
  std::sort(expected.begin(), expected.end());
  return degrees == expected;
}

namespace detail {

struct ArcSearch {
  const StateComplex* sc = nullptr;
  std::vector<std::array<int, 2>> h_edge_darts;

  explicit ArcSearch(const StateComplex& s) : sc(&s) {
    h_edge_darts.assign(sc->h_map.edge_count(), {-1, -1});
    for (int d = 0; d < sc->h_map.dart_count(); ++d) {
      auto& e = h_edge_darts[sc->h_map.edge_of(d)];
      (e[0] < 0 ? e[0] : e[1]) = d;
    }
  }

  // Does the arc split the crossing-bearing structure on its side of the
  // circle into two nonempty groups?
  bool separates(const NonPrimeArc& arc, UnionFind& comps,
                 const std::vector<int>& comp_segments) const {
    const StateCircle& circ = sc->circles[arc.circle];
    const int m = circ.length();
    std::array<std::vector<int>, 2> interval_comps;
    for (int i = 0; i < m; ++i) {
      bool in_first = arc.gap_a <= i && i < arc.gap_b;
      int vtx = circ.verts[i];
      int crossing = vtx / 2;
      if (sc->region_of_segment[crossing] != arc.region) continue;
      interval_comps[in_first ? 0 : 1].push_back(comps.find(vtx));
    }
    for (auto& v : interval_comps) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    for (int c0 : interval_comps[0])
      if (std::binary_search(interval_comps[1].begin(), interval_comps[1].end(), c0)) return false;
    for (const auto& v : interval_comps) {
      int segments = 0;
      for (int comp : v) segments += comp_segments[comp];
      if (segments == 0) return false;
    }
    return true;
  }

  // Union-find over H-vertices with the circle's own edges removed, plus
  // segment counts per class.
  std::pair<UnionFind, std::vector<int>> side_components(int circle) const {
    const StateComplex& s = *sc;
    UnionFind uf(2 * s.crossing_count);
    std::vector<char> skip(s.h_map.edge_count(), 0);
    for (int e : s.circles[circle].edges) skip[e] = 1;
    for (int e = 0; e < s.h_map.edge_count(); ++e) {
      if (skip[e]) continue;
      uf.unite(h_edge_darts[e][0] / 3, h_edge_darts[e][1] / 3);
    }
    std::vector<int> seg_count(2 * s.crossing_count, 0);
    for (int c = 0; c < s.crossing_count; ++c) ++seg_count[uf.find(2 * c)];
    return {std::move(uf), std::move(seg_count)};
  }

  std::vector<NonPrimeArc> all_candidates() const {
    const StateComplex& s = *sc;
    std::vector<NonPrimeArc> out;
    for (int ci = 0; ci < s.circle_count(); ++ci) {
      const StateCircle& circ = s.circles[ci];
      const int m = circ.length();
      for (int ga = 0; ga < m; ++ga) {
        for (int gb = ga + 1; gb < m; ++gb) {
          int ea = circ.edges[ga], eb = circ.edges[gb];
          std::array<int, 2> fa{s.h_map.face_of(h_edge_darts[ea][0]),
                                s.h_map.face_of(h_edge_darts[ea][1])};
          std::vector<int> common;
          for (int f : {s.h_map.face_of(h_edge_darts[eb][0]), s.h_map.face_of(h_edge_darts[eb][1])})
            if (f == fa[0] || f == fa[1]) common.push_back(f);
          std::sort(common.begin(), common.end());
          common.erase(std::unique(common.begin(), common.end()), common.end());
          for (int f : common) {
            NonPrimeArc arc;
            arc.circle = ci;
            arc.gap_a = ga;
            arc.gap_b = gb;
            arc.h_edge_a = ea;
            arc.h_edge_b = eb;
            arc.h_face = f;
            arc.region = s.region_of_face[f];
            out.push_back(arc);
          }
        }
      }
    }
    return out;
  }
};

}  // namespace detail

// A deterministic maximal collection of non-prime arcs: greedy scan in
// canonical order (circles by id, gaps by position), keeping every arc that
// separates segment groups and stays disjoint from the arcs already chosen.
inline std::vector<NonPrimeArc> maximal_nonprime_arcs(const StateComplex& sc) {
  require(is_adequate(sc) && is_homogeneous(sc), ErrorCode::HypothesesNotMet,
          "non-prime arc decomposition needs an adequate, homogeneous state");
  if (sc.round_unknot) return {};

  detail::ArcSearch search(sc);
  std::vector<NonPrimeArc> candidates = search.all_candidates();

  std::map<int, std::pair<UnionFind, std::vector<int>>> per_circle;
  auto sides = [&](int circle) -> std::pair<UnionFind, std::vector<int>>& {
    auto it = per_circle.find(circle);
    if (it == per_circle.end()) it = per_circle.emplace(circle, search.side_components(circle)).first;
    return it->second;
  };

  std::vector<NonPrimeArc> chosen;
  int piece_count = 0;
  for (const auto& segs : sc.region_segments)
    if (!segs.empty()) ++piece_count;

  auto admissible = [&](const NonPrimeArc& arc) {
    auto& [comps, seg_count] = sides(arc.circle);
    if (!search.separates(arc, comps, seg_count)) return false;
    std::vector<NonPrimeArc> trial = chosen;
    trial.push_back(arc);
    detail::CutComplex cx = detail::build_cut_complex(sc, trial);
    return cx.ok && cx.piece_count == piece_count + 1;
  };

  for (const auto& arc : candidates) {
    if (admissible(arc)) {
      chosen.push_back(arc);
      ++piece_count;
    }
  }
  for (const auto& arc : candidates)
    require(!admissible(arc), ErrorCode::InternalInvariant,
            "maximality scan found a further admissible non-prime arc");
  return chosen;
}

struct PolyhedronClaims {
  int region_id = 0;
  int vertices = 0;
  bool four_valent = false;
  bool euler = false;
  bool checkerboard = false;
  bool prime = false;

  bool pass() const { return four_valent && euler && checkerboard && prime; }
};

struct PolyhedralClaimsReport {
  bool hypotheses_met = false;
  bool segments_partitioned = false;  // every segment in exactly one region
  bool white_faces_match = false;     // lower white faces vs nontrivial complement regions
  int region_count = 0;
  int arc_count = 0;
  std::vector<PolyhedronClaims> polyhedra;

  bool all_pass() const {
    if (!hypotheses_met || !segments_partitioned || !white_faces_match) return false;
    return std::all_of(polyhedra.begin(), polyhedra.end(),
                       [](const PolyhedronClaims& c) { return c.pass(); });
  }
};

inline PolyhedronClaims check_lower_polyhedron(const LowerPolyhedron& poly, int region_id = 0) {
  PolyhedronClaims claims;
  claims.region_id = region_id;
  const CombinatorialMap& m = poly.skeleton;
  claims.vertices = m.vertex_count();
  claims.four_valent = true;
  for (int v = 0; v < m.vertex_count(); ++v)
    if (m.vertex_orbit(v).size() != 4) claims.four_valent = false;
  claims.euler = m.component_count() == 1 && m.euler_characteristic() == 2;
  claims.checkerboard = true;
  for (int d = 0; d < m.dart_count(); ++d)
    if (poly.face_shaded[m.face_of(d)] == poly.face_shaded[m.face_of(m.alpha(d))])
      claims.checkerboard = false;
  claims.prime = claims.four_valent && claims.euler && map_is_prime_4valent(m);
  return claims;
}

// The combinatorial content of the ideal-decomposition statement: every lower
// polyhedron is 4-valent, planar, checkerboard colored, and prime.  The
// decomposition itself needs only a connected diagram with an adequate
// homogeneous state; the prime-sub-diagram claim additionally needs a prime
// diagram (a nugatory crossing leaves a one-crossing region that no
// non-prime arc can split).
inline PolyhedralClaimsReport verify_polyhedral_claims(const LinkDiagram& d,
                                                       const KauffmanState& sigma) {
  PolyhedralClaimsReport report;
  StateComplex sc = apply_state(d, sigma);
  report.hypotheses_met = !sc.round_unknot && is_adequate(sc) && is_homogeneous(sc);
  if (!report.hypotheses_met) return report;

  std::vector<NonPrimeArc> arcs = maximal_nonprime_arcs(sc);
  report.arc_count = static_cast<int>(arcs.size());
  std::vector<PolyhedralRegion> regions = decompose_regions(sc, arcs);
  report.region_count = static_cast<int>(regions.size());

  std::vector<int> seen(sc.crossing_count, 0);
  int total_white = 0;
  for (const auto& region : regions) {
    for (int s : region.segments) ++seen[s];
    LowerPolyhedron poly = lower_skeleton(region, /*check_prime=*/false);
    report.polyhedra.push_back(check_lower_polyhedron(poly, region.id));
    total_white += poly.white_count;
  }
  report.segments_partitioned =
      std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; });

  // White faces of the lower polyhedra correspond to the crossing-adjacent
  // complementary regions of H_sigma together with the arcs.
  detail::CutComplex cx = detail::build_cut_complex(sc, arcs);
  int nontrivial = 0;
  for (int f = 0; f < cx.map.face_count(); ++f) {
    bool touches_segment = false;
    for (int dart : cx.map.face_orbit(f))
      if (cx.kind[dart] == detail::CutComplex::kSegment) touches_segment = true;
    if (touches_segment) ++nontrivial;
  }
  report.white_faces_match = total_white == nontrivial;
  return report;
}

}  // namespace statesurf
