#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "statesurf/combinatorial_map.hpp"
#include "statesurf/errors.hpp"
#include "statesurf/link_diagram.hpp"
#include "statesurf/union_find.hpp"

namespace statesurf {

enum class Resolution : uint8_t { A = 0, B = 1 };

inline Resolution opposite(Resolution r) { return r == Resolution::A ? Resolution::B : Resolution::A; }
inline char resolution_char(Resolution r) { return r == Resolution::A ? 'A' : 'B'; }

// An A/B choice per crossing.
struct KauffmanState {
  std::vector<Resolution> choice;

  static KauffmanState all_A(int crossings) { return {std::vector<Resolution>(crossings, Resolution::A)}; }
  static KauffmanState all_B(int crossings) { return {std::vector<Resolution>(crossings, Resolution::B)}; }

  // Bit i is crossing i's label, A = 0.
  static KauffmanState from_mask(int crossings, uint64_t mask) {
    KauffmanState s;
    s.choice.resize(crossings);
    for (int i = 0; i < crossings; ++i)
      s.choice[i] = (mask >> i) & 1 ? Resolution::B : Resolution::A;
    return s;
  }

  uint64_t mask() const {
    uint64_t m = 0;
    for (std::size_t i = 0; i < choice.size(); ++i)
      if (choice[i] == Resolution::B) m |= uint64_t(1) << i;
    return m;
  }

  KauffmanState dual() const {
    KauffmanState s = *this;
    for (auto& r : s.choice) r = opposite(r);
    return s;
  }

  int count(Resolution r) const {
    return static_cast<int>(std::count(choice.begin(), choice.end(), r));
  }

  bool operator==(const KauffmanState&) const = default;
};

// One state circle of s_sigma, as traced in H_sigma.  Entry i of the three
// parallel arrays: the walk traverses H-edge `edges[i]` (a piece of diagram
// arc `arcs[i]`) and then passes the attachment vertex `verts[i]`.
struct StateCircle {
  std::vector<int> edges;
  std::vector<int> arcs;
  std::vector<int> verts;
  int length() const { return static_cast<int>(edges.size()); }
};

// The result of applying a Kauffman state: the circles s_sigma, the planar
// graph H_sigma with one segment per crossing, and the partition of segments
// into complementary regions of s_sigma.
struct StateComplex {
  KauffmanState state;
  int crossing_count = 0;
  bool round_unknot = false;

  // H_sigma.  Per crossing c the darts 6c..6c+5 are: segment dart and two
  // circle darts at the first smoothing arc, then the same at the second.
  CombinatorialMap h_map;
  std::vector<int> h_edge_segment;  // H-edge -> crossing id, or -1 for circle arcs
  std::vector<int> h_edge_arc;      // H-edge -> diagram arc index, or -1 for segments
  std::vector<int> hout;            // diagram dart -> its circle dart in H

  std::vector<StateCircle> circles;
  std::vector<int> circle_of_vertex;      // H-vertex -> circle id
  std::vector<int> circle_position;       // H-vertex -> index in its circle's vert list

  std::vector<int> region_of_face;        // H-face -> region id (all regions)
  std::vector<int> region_of_segment;     // crossing -> region id
  std::vector<std::vector<int>> region_segments;  // region id -> segments (may be empty)
  int region_count = 0;

  int circle_count() const { return static_cast<int>(circles.size()); }

  static int vertex_u(int crossing) { return 2 * crossing; }
  static int vertex_v(int crossing) { return 2 * crossing + 1; }
  int crossing_of_vertex(int hv) const { return hv / 2; }

  int segment_circle_u(int c) const { return circle_of_vertex[vertex_u(c)]; }
  int segment_circle_v(int c) const { return circle_of_vertex[vertex_v(c)]; }
  Resolution segment_label(int c) const { return state.choice[c]; }
};

// Splice every crossing according to sigma, trace the circles, attach one
// segment per crossing, and partition segments into complementary regions
// (faces of H_sigma merged across segments).
inline StateComplex apply_state(const LinkDiagram& d, const KauffmanState& sigma) {
  StateComplex sc;
  sc.state = sigma;
  sc.crossing_count = d.crossing_count();
  if (d.is_round_unknot()) {
    require(sigma.choice.empty(), ErrorCode::InternalInvariant,
            "state must be empty for the round unknot");
    sc.round_unknot = true;
    sc.circles.emplace_back();
    sc.region_count = 0;
    return sc;
  }
  require(static_cast<int>(sigma.choice.size()) == d.crossing_count(), ErrorCode::InternalInvariant,
          "state size does not match crossing count");

  const int c = d.crossing_count();
  const int hdarts = 6 * c;
  std::vector<int> rotation(hdarts), pairing(hdarts, -1);
  sc.hout.assign(4 * c, -1);

  for (int ci = 0; ci < c; ++ci) {
    int base = 6 * ci;
    // First smoothing arc joins diagram darts (x, sigma x); the A-resolution
    // starts at the incoming understrand, the B-resolution one step later.
    int x = LinkDiagram::dart(ci, sigma.choice[ci] == Resolution::A ? 0 : 1);
    auto rot = [&](int k) { return 4 * ci + (x + k) % 4; };
    sc.hout[rot(0)] = base + 1;
    sc.hout[rot(1)] = base + 2;
    sc.hout[rot(2)] = base + 4;
    sc.hout[rot(3)] = base + 5;
    rotation[base + 0] = base + 1;
    rotation[base + 1] = base + 2;
    rotation[base + 2] = base + 0;
    rotation[base + 3] = base + 4;
    rotation[base + 4] = base + 5;
    rotation[base + 5] = base + 3;
    pairing[base + 0] = base + 3;
    pairing[base + 3] = base + 0;
  }
  for (int dd = 0; dd < 4 * c; ++dd) {
    int other = d.map().alpha(dd);
    pairing[sc.hout[dd]] = sc.hout[other];
  }
  sc.h_map = CombinatorialMap(std::move(rotation), std::move(pairing));
  sc.h_map.validate();
  require(sc.h_map.is_planar_connected(), ErrorCode::InternalInvariant,
          "H_sigma must be planar and connected");

  sc.h_edge_segment.assign(sc.h_map.edge_count(), -1);
  sc.h_edge_arc.assign(sc.h_map.edge_count(), -1);
  for (int ci = 0; ci < c; ++ci) sc.h_edge_segment[sc.h_map.edge_of(6 * ci)] = ci;
  for (int dd = 0; dd < 4 * c; ++dd) sc.h_edge_arc[sc.h_map.edge_of(sc.hout[dd])] = d.arc_of_dart(dd);

  // Circle tracing.  At a trivalent vertex the two circle darts are the
  // non-segment ones; the walk crosses each circle-arc edge once.
  auto is_segment_dart = [&](int h) { return h % 6 == 0 || h % 6 == 3; };
  auto other_circle_dart = [&](int h) {
    int base = (h / 3) * 3;
    return base + (h % 3 == 1 ? 2 : 1);
  };
  sc.circle_of_vertex.assign(2 * c, -1);
  sc.circle_position.assign(2 * c, -1);
  std::vector<char> edge_done(sc.h_map.edge_count(), 0);
  for (int h0 = 0; h0 < hdarts; ++h0) {
    if (is_segment_dart(h0) || edge_done[sc.h_map.edge_of(h0)]) continue;
    StateCircle circle;
    int id = static_cast<int>(sc.circles.size());
    int h = h0;
    do {
      int e = sc.h_map.edge_of(h);
      edge_done[e] = 1;
      circle.edges.push_back(e);
      circle.arcs.push_back(sc.h_edge_arc[e]);
      int j = sc.h_map.alpha(h);
      int vtx = j / 3;
      circle.verts.push_back(vtx);
      sc.circle_of_vertex[vtx] = id;
      sc.circle_position[vtx] = circle.length() - 1;
      h = other_circle_dart(j);
    } while (h != h0);
    sc.circles.push_back(std::move(circle));
  }

  // Complementary regions of s_sigma: H-faces merged across segments.
  UnionFind regions(sc.h_map.face_count());
  for (int ci = 0; ci < c; ++ci)
    regions.unite(sc.h_map.face_of(6 * ci), sc.h_map.face_of(6 * ci + 3));
  sc.region_of_face.assign(sc.h_map.face_count(), -1);
  int next_region = 0;
  for (int f = 0; f < sc.h_map.face_count(); ++f) {
    int root = regions.find(f);
    if (sc.region_of_face[root] < 0) sc.region_of_face[root] = next_region++;
    sc.region_of_face[f] = sc.region_of_face[root];
  }
  sc.region_count = next_region;
  sc.region_segments.assign(next_region, {});
  sc.region_of_segment.assign(c, -1);
  for (int ci = 0; ci < c; ++ci) {
    int r = sc.region_of_face[sc.h_map.face_of(6 * ci)];
    sc.region_of_segment[ci] = r;
    sc.region_segments[r].push_back(ci);
  }
  return sc;
}

// True when no segment of H_sigma has both endpoints on one state circle.
inline bool is_adequate(const StateComplex& sc) {
  for (int c = 0; c < sc.crossing_count; ++c)
    if (sc.segment_circle_u(c) == sc.segment_circle_v(c)) return false;
  return true;
}

// The partition of segments into complementary regions of s_sigma; regions
// without segments are dropped.
inline std::vector<std::vector<int>> complementary_regions(const StateComplex& sc) {
  std::vector<std::vector<int>> parts;
  for (const auto& seg : sc.region_segments)
    if (!seg.empty()) parts.push_back(seg);
  return parts;
}

// True when every complementary region carries a single A/B label.
inline bool is_homogeneous(const StateComplex& sc) {
  for (const auto& segs : sc.region_segments) {
    for (std::size_t i = 1; i < segs.size(); ++i)
      if (sc.state.choice[segs[i]] != sc.state.choice[segs[0]]) return false;
  }
  return true;
}

// The oriented resolution at every crossing: A at positive crossings, B at
// negative ones under the fixed sign convention.
inline KauffmanState seifert_state(const LinkDiagram& d, const Orientation& o) {
  KauffmanState s;
  s.choice.resize(d.crossing_count());
  for (int c = 0; c < d.crossing_count(); ++c)
    s.choice[c] = d.crossing_sign(c, o) > 0 ? Resolution::A : Resolution::B;
  return s;
}

// Allocation-light per-state evaluation used by the search and bracket
// state sums.  Circles come from a union-find over diagram darts; the
// complementary regions from merging diagram faces at each smoothed corner.
class FastStateEvaluator {
 public:
  explicit FastStateEvaluator(const LinkDiagram& d) : d_(&d) {
    const int c = d.crossing_count();
    darts_.reset(4 * c);
    faces_.reset(d.is_round_unknot() ? 0 : d.map().face_count());
    region_label_.assign(faces_.size(), -1);
  }

  struct Verdict {
    int circle_count = 0;
    bool adequate = false;
    bool homogeneous = false;
  };

  // Circle count only (enough for the bracket).
  int circle_count(const KauffmanState& s) {
    splice(s);
    return darts_.count();
  }

  Verdict evaluate(const KauffmanState& s) {
    Verdict v;
    const LinkDiagram& d = *d_;
    const int c = d.crossing_count();
    splice(s);
    v.circle_count = darts_.count();
    v.adequate = true;
    for (int ci = 0; ci < c && v.adequate; ++ci) {
      int d0 = LinkDiagram::dart(ci, s.choice[ci] == Resolution::A ? 0 : 1);
      int d2 = 4 * ci + (d0 + 2) % 4;
      if (darts_.same(d0, d2)) v.adequate = false;
    }
    // Merge the two diagram faces swallowed by each smoothing; the merge
    // classes are the complementary regions of the state circles.
    faces_.reset(d.map().face_count());
    for (int ci = 0; ci < c; ++ci) {
      auto [fa, fb] = merged_faces(ci, s.choice[ci]);
      faces_.unite(fa, fb);
    }
    std::fill(region_label_.begin(), region_label_.end(), -1);
    v.homogeneous = true;
    for (int ci = 0; ci < c && v.homogeneous; ++ci) {
      int root = faces_.find(merged_faces(ci, s.choice[ci]).first);
      int label = static_cast<int>(s.choice[ci]);
      if (region_label_[root] < 0)
        region_label_[root] = label;
      else if (region_label_[root] != label)
        v.homogeneous = false;
    }
    return v;
  }

  // Region id per segment under the same face-merge as evaluate().
  std::vector<int> region_of_segment(const KauffmanState& s) {
    const LinkDiagram& d = *d_;
    faces_.reset(d.map().face_count());
    for (int ci = 0; ci < d.crossing_count(); ++ci) {
      auto [fa, fb] = merged_faces(ci, s.choice[ci]);
      faces_.unite(fa, fb);
    }
    std::vector<int> out(d.crossing_count());
    for (int ci = 0; ci < d.crossing_count(); ++ci)
      out[ci] = faces_.find(merged_faces(ci, s.choice[ci]).first);
    return out;
  }

 private:
  std::pair<int, int> merged_faces(int ci, Resolution r) const {
    const CombinatorialMap& m = d_->map();
    if (r == Resolution::A)
      return {m.face_of(LinkDiagram::dart(ci, 2)), m.face_of(LinkDiagram::dart(ci, 0))};
    return {m.face_of(LinkDiagram::dart(ci, 1)), m.face_of(LinkDiagram::dart(ci, 3))};
  }

  void splice(const KauffmanState& s) {
    const LinkDiagram& d = *d_;
    const int c = d.crossing_count();
    darts_.reset(4 * c);
    for (int ci = 0; ci < c; ++ci) {
      int first = s.choice[ci] == Resolution::A ? 0 : 1;
      darts_.unite(4 * ci + first, 4 * ci + (first + 1) % 4);
      darts_.unite(4 * ci + (first + 2) % 4, 4 * ci + (first + 3) % 4);
    }
    for (int a = 0; a < d.arc_count(); ++a) {
      const auto& e = d.arc_darts(a);
      darts_.unite(e[0], e[1]);
    }
  }

  const LinkDiagram* d_;
  UnionFind darts_;
  UnionFind faces_;
  std::vector<int> region_label_;
};

}  // namespace statesurf
