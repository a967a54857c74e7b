#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "statesurf/errors.hpp"
#include "statesurf/kauffman.hpp"
#include "statesurf/union_find.hpp"

namespace statesurf {

// G_sigma: one vertex per state circle, one edge per segment; loops and
// parallel edges allowed.
struct StateGraph {
  int vertex_count = 0;
  struct Edge {
    int u, v;
    int segment;  // crossing id
    Resolution label;
  };
  std::vector<Edge> edges;

  bool has_loop() const {
    return std::any_of(edges.begin(), edges.end(), [](const Edge& e) { return e.u == e.v; });
  }
};

// G'_sigma: parallel edge classes collapsed, multiplicities remembered.
struct ReducedStateGraph {
  int vertex_count = 0;
  struct Edge {
    int u, v;
    int multiplicity;  // number of parallel segments this edge replaced
  };
  std::vector<Edge> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  int euler_characteristic() const { return vertex_count - edge_count(); }

  bool is_connected() const {
    if (vertex_count == 0) return false;
    UnionFind uf(vertex_count);
    for (const auto& e : edges) uf.unite(e.u, e.v);
    return uf.count() == 1;
  }
};

inline StateGraph build_state_graph(const StateComplex& sc) {
  StateGraph g;
  g.vertex_count = sc.circle_count();
  g.edges.reserve(sc.crossing_count);
  for (int c = 0; c < sc.crossing_count; ++c)
    g.edges.push_back({sc.segment_circle_u(c), sc.segment_circle_v(c), c, sc.segment_label(c)});
  return g;
}

inline ReducedStateGraph reduce(const StateGraph& g) {
  require(!g.has_loop(), ErrorCode::InadequateState,
          "state graph has a loop edge; reduction is defined for adequate states only");
  ReducedStateGraph r;
  r.vertex_count = g.vertex_count;
  std::map<std::pair<int, int>, int> count;
  for (const auto& e : g.edges) count[{std::min(e.u, e.v), std::max(e.u, e.v)}]++;
  for (const auto& [key, mult] : count) r.edges.push_back({key.first, key.second, mult});
  return r;
}

// 1 - chi(G'), the stabilized second-extreme Jones coefficient for the
// all-A and all-B states.
inline int stable_coefficient(const ReducedStateGraph& g) {
  int value = 1 - g.euler_characteristic();
  require(value >= 0, ErrorCode::InternalInvariant, "stable coefficient must be nonnegative");
  return value;
}

inline bool is_tree(const ReducedStateGraph& g) {
  require(g.is_connected(), ErrorCode::Disconnected, "tree test needs a connected graph");
  return g.edge_count() == g.vertex_count - 1;
}

}  // namespace statesurf
