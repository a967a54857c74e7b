#pragma once

#include <array>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "statesurf/combinatorial_map.hpp"
#include "statesurf/errors.hpp"
#include "statesurf/union_find.hpp"

namespace statesurf {

// One crossing of a diagram, stored as its PD tuple: the four incident arc
// labels in counterclockwise order starting at the incoming understrand.
// Positions 0 and 2 carry the understrand, positions 1 and 3 the overstrand.
struct Crossing {
  std::array<int, 4> arcs{};
};

struct BraidWord {
  int strands = 2;
  std::vector<int> letters;  // letter i means generator sigma_i, negative = inverse

  void validate() const {
    require(strands >= 2, ErrorCode::MalformedCode, "braid needs at least 2 strands");
    for (int w : letters)
      require(w != 0 && w > -strands && w < strands, ErrorCode::MalformedCode,
              "braid letter out of range");
  }
};

// Direction choice per link component, relative to the diagram's stored
// reference traversal.
struct Orientation {
  std::vector<uint8_t> flip;  // one entry per component; 1 reverses
};

class LinkDiagram {
 public:
  // The 0-crossing diagram of the unknot: one round circle, no map.
  static LinkDiagram round_unknot() {
    LinkDiagram d;
    d.component_count_ = 1;
    return d;
  }

  static LinkDiagram from_crossings(std::vector<Crossing> crossings,
                                    const std::map<int, int>* head_hints = nullptr) {
    LinkDiagram d;
    d.crossings_ = std::move(crossings);
    d.build(head_hints);
    return d;
  }

  bool is_round_unknot() const { return crossings_.empty(); }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int arc_count() const { return static_cast<int>(arc_labels_.size()); }
  int component_count() const { return component_count_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const CombinatorialMap& map() const { return map_; }

  static int dart(int crossing, int position) { return 4 * crossing + position; }
  static int crossing_of_dart(int d) { return d / 4; }
  static int position_of_dart(int d) { return d % 4; }

  int arc_of_dart(int d) const { return dart_arc_[d]; }
  int arc_label(int arc_index) const { return arc_labels_[arc_index]; }
  const std::array<int, 2>& arc_darts(int arc_index) const { return arc_darts_[arc_index]; }
  int component_of_arc(int arc_index) const { return arc_component_[arc_index]; }

  // True when the reference traversal enters a crossing through this dart.
  bool ref_in(int d) const { return ref_head_[dart_arc_[d]] == d; }

  // The dart through which the reference traversal of this arc enters its
  // crossing.
  int reference_head(int arc_index) const { return ref_head_[arc_index]; }

  Orientation reference_orientation() const {
    Orientation o;
    o.flip.assign(component_count_, 0);
    return o;
  }

  int crossing_sign(int c, const Orientation& o) const {
    int d0 = dart(c, 0), d3 = dart(c, 3);
    bool base = ref_in(d0) == ref_in(d3);
    uint8_t f = o.flip[arc_component_[dart_arc_[d0]]] ^ o.flip[arc_component_[dart_arc_[d3]]];
    return (base != (f != 0)) ? +1 : -1;
  }

  bool equivalent_to(const LinkDiagram& other) const {
    if (crossing_count() != other.crossing_count()) return false;
    for (int c = 0; c < crossing_count(); ++c) {
      const auto& a = crossings_[c].arcs;
      const auto& b = other.crossings_[c].arcs;
      bool same = a == b;
      bool rotated = a[0] == b[2] && a[1] == b[3] && a[2] == b[0] && a[3] == b[1];
      if (!same && !rotated) return false;
    }
    return true;
  }

 private:
  void build(const std::map<int, int>* head_hints) {
    const int c = crossing_count();
    require(c > 0, ErrorCode::MalformedCode, "diagram needs at least one crossing");
    const int n = 4 * c;

    // Arc index assignment in order of first appearance.
    std::map<int, int> index_of_label;
    dart_arc_.assign(n, -1);
    for (int ci = 0; ci < c; ++ci) {
      for (int p = 0; p < 4; ++p) {
        int label = crossings_[ci].arcs[p];
        require(label > 0, ErrorCode::MalformedCode, "arc labels must be positive");
        auto [it, inserted] = index_of_label.try_emplace(label, static_cast<int>(arc_labels_.size()));
        if (inserted) {
          arc_labels_.push_back(label);
          arc_darts_.push_back({dart(ci, p), -1});
        } else {
          auto& darts = arc_darts_[it->second];
          require(darts[1] < 0, ErrorCode::ArcMultiplicity,
                  "arc label " + std::to_string(label) + " appears more than twice");
          darts[1] = dart(ci, p);
        }
        dart_arc_[dart(ci, p)] = it->second;
      }
    }
    for (std::size_t a = 0; a < arc_darts_.size(); ++a)
      require(arc_darts_[a][1] >= 0, ErrorCode::ArcMultiplicity,
              "arc label " + std::to_string(arc_labels_[a]) + " appears only once");

    std::vector<int> rotation(n), pairing(n);
    for (int d = 0; d < n; ++d) {
      rotation[d] = 4 * (d / 4) + (d + 1) % 4;
      const auto& darts = arc_darts_[dart_arc_[d]];
      pairing[d] = darts[0] == d ? darts[1] : darts[0];
    }
    map_ = CombinatorialMap(std::move(rotation), std::move(pairing));
    map_.validate();
    require(map_.component_count() == 1, ErrorCode::Disconnected, "diagram is not connected");
    require(map_.euler_characteristic() == 2, ErrorCode::NonPlanar,
            "diagram has positive genus (V - E + F != 2)");

    trace_components(head_hints);
  }

  // Follow strands through crossings (exit opposite the entry position),
  // fixing the reference direction per component and grouping arcs.
  void trace_components(const std::map<int, int>* head_hints) {
    const int arcs = arc_count();
    arc_component_.assign(arcs, -1);
    ref_head_.assign(arcs, -1);
    component_count_ = 0;
    for (int a0 = 0; a0 < arcs; ++a0) {
      if (arc_component_[a0] >= 0) continue;
      int comp = component_count_++;
      int head = arc_darts_[a0][1];
      if (head_hints) {
        auto it = head_hints->find(a0);
        if (it != head_hints->end()) head = it->second;
      }
      int arc = a0;
      while (arc_component_[arc] < 0) {
        arc_component_[arc] = comp;
        ref_head_[arc] = head;
        int exit = 4 * (head / 4) + (head + 2) % 4;
        int next_arc = dart_arc_[exit];
        const auto& darts = arc_darts_[next_arc];
        head = darts[0] == exit ? darts[1] : darts[0];
        if (head_hints) {
          auto it = head_hints->find(next_arc);
          require(it == head_hints->end() || it->second == head || arc_component_[next_arc] >= 0,
                  ErrorCode::InternalInvariant, "inconsistent orientation hints");
        }
        arc = next_arc;
      }
    }
  }

  std::vector<Crossing> crossings_;
  CombinatorialMap map_;
  std::vector<int> dart_arc_;
  std::vector<int> arc_labels_;
  std::vector<std::array<int, 2>> arc_darts_;
  std::vector<int> arc_component_;
  std::vector<int> ref_head_;
  int component_count_ = 0;
};

// ---------------------------------------------------------------------------
// PD-code text form: `X[a,b,c,d]` tuples separated by commas, optionally
// wrapped in `PD[...]`, whitespace-insensitive.

inline LinkDiagram parse_pd(std::string_view text) {
  std::string compact;
  compact.reserve(text.size());
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  require(!compact.empty(), ErrorCode::MalformedCode, "empty PD code");

  std::string_view s(compact);
  if (s.size() >= 3 && (s.substr(0, 3) == "PD[")) {
    require(s.back() == ']', ErrorCode::MalformedCode, "unterminated PD[...] wrapper");
    s = s.substr(3, s.size() - 4);
  }
  require(!s.empty(), ErrorCode::MalformedCode, "empty PD code");

  std::vector<Crossing> crossings;
  std::size_t i = 0;
  auto expect = [&](char ch) {
    require(i < s.size() && s[i] == ch, ErrorCode::MalformedCode,
            std::string("expected '") + ch + "' in PD code");
    ++i;
  };
  auto read_int = [&]() {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    require(i > start, ErrorCode::MalformedCode, "expected an arc label");
    return std::stoi(std::string(s.substr(start, i - start)));
  };
  while (i < s.size()) {
    expect('X');
    expect('[');
    Crossing cr;
    for (int p = 0; p < 4; ++p) {
      cr.arcs[p] = read_int();
      if (p < 3) expect(',');
    }
    expect(']');
    crossings.push_back(cr);
    if (i < s.size()) expect(',');
  }
  return LinkDiagram::from_crossings(std::move(crossings));
}

inline std::string emit_pd(const LinkDiagram& d) {
  std::string out = "PD[";
  for (int c = 0; c < d.crossing_count(); ++c) {
    if (c) out += ",";
    const auto& a = d.crossings()[c].arcs;
    out += "X[" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]) +
           "," + std::to_string(a[3]) + "]";
  }
  out += "]";
  return out;
}

// Braid text form: strand count, an optional ':', then signed letters.
inline BraidWord parse_braid(std::string_view text) {
  BraidWord b;
  std::string buf(text);
  for (char& ch : buf)
    if (ch == ':' || ch == ',') ch = ' ';
  std::size_t pos = 0;
  auto next_token = [&]() -> std::optional<std::string> {
    while (pos < buf.size() && std::isspace(static_cast<unsigned char>(buf[pos]))) ++pos;
    if (pos >= buf.size()) return std::nullopt;
    std::size_t start = pos;
    while (pos < buf.size() && !std::isspace(static_cast<unsigned char>(buf[pos]))) ++pos;
    return buf.substr(start, pos - start);
  };
  auto to_int = [](const std::string& t) {
    try {
      std::size_t used = 0;
      int v = std::stoi(t, &used);
      require(used == t.size(), ErrorCode::MalformedCode, "bad braid token '" + t + "'");
      return v;
    } catch (const Error&) {
      throw;
    } catch (...) {
      fail(ErrorCode::MalformedCode, "bad braid token '" + t + "'");
    }
  };
  auto first = next_token();
  require(first.has_value(), ErrorCode::MalformedCode, "empty braid input");
  b.strands = to_int(*first);
  while (auto tok = next_token()) b.letters.push_back(to_int(*tok));
  b.validate();
  return b;
}

// Standard closure of a braid, all strands oriented downward.  A positive
// letter gives a crossing of sign +1 under the fixed convention.
inline LinkDiagram braid_closure(const BraidWord& b) {
  b.validate();
  const int c = static_cast<int>(b.letters.size());
  require(c > 0, ErrorCode::Disconnected, "closure of the empty braid is a crossingless unlink");

  // Provisional arc ids; closure identifications resolved by union-find.
  int next_arc = 0;
  std::vector<int> top(b.strands);
  std::vector<int> cur(b.strands);
  for (int k = 0; k < b.strands; ++k) top[k] = cur[k] = next_arc++;

  struct ProtoCrossing {
    std::array<int, 4> arcs;
    std::array<int, 2> head_positions;  // positions whose arcs enter the crossing here
  };
  std::vector<ProtoCrossing> proto;
  proto.reserve(c);
  for (int w : b.letters) {
    int i = std::abs(w) - 1;  // 0-based column
    int left = cur[i], right = cur[i + 1];
    int bl = next_arc++, br = next_arc++;
    if (w > 0) {
      // understrand: top-left to bottom-right; tuple CCW from under-in.
      proto.push_back({{left, bl, br, right}, {0, 3}});
    } else {
      proto.push_back({{right, left, bl, br}, {0, 1}});
    }
    cur[i] = bl;
    cur[i + 1] = br;
  }

  UnionFind merge(next_arc);
  for (int k = 0; k < b.strands; ++k) {
    require(cur[k] != top[k], ErrorCode::Disconnected,
            "braid strand " + std::to_string(k + 1) + " has no crossings");
    merge.unite(cur[k], top[k]);
  }

  std::vector<int> final_label(next_arc, 0);
  std::vector<Crossing> crossings(c);
  std::map<int, int> head_hints;  // final arc index -> head dart
  int labels_used = 0;
  std::vector<int> label_of_root(next_arc, 0);
  std::map<int, int> arc_index_of_label;
  for (int ci = 0; ci < c; ++ci) {
    for (int p = 0; p < 4; ++p) {
      int root = merge.find(proto[ci].arcs[p]);
      if (label_of_root[root] == 0) label_of_root[root] = ++labels_used;
      crossings[ci].arcs[p] = label_of_root[root];
      auto [it, inserted] =
          arc_index_of_label.try_emplace(label_of_root[root], static_cast<int>(arc_index_of_label.size()));
      (void)inserted;
      for (int hp : proto[ci].head_positions)
        if (hp == p) head_hints[it->second] = LinkDiagram::dart(ci, p);
    }
  }
  return LinkDiagram::from_crossings(std::move(crossings), &head_hints);
}

// Over/under swapped at every crossing; the underlying map and the strand
// directions are unchanged (so oriented invariants of links correspond).
inline LinkDiagram mirror(const LinkDiagram& d) {
  if (d.is_round_unknot()) return d;
  std::vector<Crossing> out(d.crossing_count());
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto& a = d.crossings()[c].arcs;
    out[c].arcs = {a[1], a[2], a[3], a[0]};
  }
  // Arc indices of the mirrored diagram, in its first-appearance order.
  std::map<int, int> index_of_label;
  for (const auto& cr : out)
    for (int label : cr.arcs) index_of_label.try_emplace(label, static_cast<int>(index_of_label.size()));
  std::map<int, int> hints;
  for (int a = 0; a < d.arc_count(); ++a) {
    int head = d.reference_head(a);
    int mapped = 4 * (head / 4) + (head % 4 + 3) % 4;
    hints[index_of_label.at(d.arc_label(a))] = mapped;
  }
  return LinkDiagram::from_crossings(std::move(out), &hints);
}

// Standard pretzel diagram: vertical twist regions q_1 .. q_k chained
// cyclically along a top and a bottom bus strand.  All twists share one
// handedness, so the diagram is alternating.
inline LinkDiagram pretzel(const std::vector<int>& qs) {
  require(qs.size() >= 2, ErrorCode::MalformedCode, "a pretzel needs at least two twist regions");
  for (int q : qs) require(q >= 1, ErrorCode::MalformedCode, "twist regions need at least one crossing");
  int next_arc = 0;
  std::vector<std::array<int, 4>> tuples;
  const int k = static_cast<int>(qs.size());
  std::vector<int> top_left(k), top_right(k), bottom_left(k), bottom_right(k);
  for (int i = 0; i < k; ++i) {
    int left = next_arc++, right = next_arc++;
    top_left[i] = left;
    top_right[i] = right;
    for (int j = 0; j < qs[i]; ++j) {
      int bl = next_arc++, br = next_arc++;
      tuples.push_back({left, bl, br, right});
      left = bl;
      right = br;
    }
    bottom_left[i] = left;
    bottom_right[i] = right;
  }
  UnionFind merge(next_arc);
  for (int i = 0; i < k; ++i) {
    merge.unite(top_right[i], top_left[(i + 1) % k]);
    merge.unite(bottom_right[i], bottom_left[(i + 1) % k]);
  }
  std::vector<Crossing> crossings(tuples.size());
  std::vector<int> label_of_root(next_arc, 0);
  int labels = 0;
  for (std::size_t c = 0; c < tuples.size(); ++c) {
    for (int p = 0; p < 4; ++p) {
      int root = merge.find(tuples[c][p]);
      if (label_of_root[root] == 0) label_of_root[root] = ++labels;
      crossings[c].arcs[p] = label_of_root[root];
    }
  }
  return LinkDiagram::from_crossings(std::move(crossings));
}

// Along every strand passage through the diagram, over and under alternate.
inline bool is_alternating(const LinkDiagram& d) {
  for (int a = 0; a < d.arc_count(); ++a) {
    const auto& darts = d.arc_darts(a);
    bool under0 = darts[0] % 4 == 0 || darts[0] % 4 == 2;
    bool under1 = darts[1] % 4 == 0 || darts[1] % 4 == 2;
    if (under0 == under1) return false;
  }
  return true;
}

inline int writhe(const LinkDiagram& d, const Orientation& o) {
  int w = 0;
  for (int c = 0; c < d.crossing_count(); ++c) w += d.crossing_sign(c, o);
  return w;
}

inline int writhe(const LinkDiagram& d) { return writhe(d, d.reference_orientation()); }

// Primeness of a connected 4-valent map.  The map fails to be prime when a
// simple closed curve meeting it in two edge points (or in a single vertex)
// has vertices on both sides -- equivalently, when a separating pair of
// edges co-bounds two faces, or a face touches some vertex at two opposite
// corners (a nugatory crossing).
inline bool map_is_prime_4valent(const CombinatorialMap& m) {
  require(m.component_count() == 1, ErrorCode::Disconnected, "primeness needs a connected map");
  for (int v = 0; v < m.vertex_count(); ++v) {
    const auto& orbit = m.vertex_orbit(v);
    require(orbit.size() == 4, ErrorCode::InternalInvariant, "primeness needs a 4-valent map");
    if (m.face_of(orbit[1]) == m.face_of(orbit[3])) return false;
    if (m.face_of(orbit[2]) == m.face_of(orbit[0])) return false;
  }

  const int edges = m.edge_count();
  std::vector<std::array<int, 2>> edge_darts(edges, {-1, -1});
  for (int dd = 0; dd < m.dart_count(); ++dd) {
    auto& e = edge_darts[m.edge_of(dd)];
    (e[0] < 0 ? e[0] : e[1]) = dd;
  }
  auto side_faces = [&](int e) {
    int f1 = m.face_of(edge_darts[e][0]);
    int f2 = m.face_of(edge_darts[e][1]);
    return std::array<int, 2>{std::min(f1, f2), std::max(f1, f2)};
  };
  for (int e1 = 0; e1 < edges; ++e1) {
    for (int e2 = e1 + 1; e2 < edges; ++e2) {
      if (side_faces(e1) != side_faces(e2)) continue;
      UnionFind uf(m.vertex_count());
      for (int e = 0; e < edges; ++e) {
        if (e == e1 || e == e2) continue;
        uf.unite(m.vertex_of(edge_darts[e][0]), m.vertex_of(edge_darts[e][1]));
      }
      if (uf.count() > 1) return false;
    }
  }
  return true;
}

inline bool is_prime(const LinkDiagram& d) {
  require(!d.is_round_unknot() && d.crossing_count() >= 1, ErrorCode::ZeroCrossings,
          "primeness is undefined for the round unknot");
  return map_is_prime_4valent(d.map());
}

}  // namespace statesurf
