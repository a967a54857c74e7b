#pragma once

#include <algorithm>
#include <vector>

#include "statesurf/errors.hpp"
#include "statesurf/union_find.hpp"

namespace statesurf {

// A combinatorial map: darts with a vertex rotation (next dart counterclockwise
// around its vertex) and a fixed-point-free pairing of darts into edges.
// Face orbits are traced by applying the pairing and then the rotation.
class CombinatorialMap {
 public:
  CombinatorialMap() = default;
  CombinatorialMap(std::vector<int> rotation, std::vector<int> pairing)
      : sigma_(std::move(rotation)), alpha_(std::move(pairing)) {
    rebuild();
  }

  int dart_count() const { return static_cast<int>(sigma_.size()); }
  int sigma(int d) const { return sigma_[d]; }
  int alpha(int d) const { return alpha_[d]; }
  int phi(int d) const { return sigma_[alpha_[d]]; }  // face walk step

  int vertex_of(int d) const { return vertex_of_[d]; }
  int face_of(int d) const { return face_of_[d]; }
  int edge_of(int d) const { return edge_of_[d]; }

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return dart_count() / 2; }
  int face_count() const { return face_count_; }
  int component_count() const { return component_count_; }

  // 2 - 2g summed over components equals V - E + F; for a single planar
  // component this is 2.
  int euler_characteristic() const { return vertex_count_ - edge_count() + face_count_; }
  bool is_planar_connected() const { return component_count_ == 1 && euler_characteristic() == 2; }

  const std::vector<int>& vertex_orbit(int v) const { return vertex_orbits_[v]; }
  const std::vector<int>& face_orbit(int f) const { return face_orbits_[f]; }
  int face_degree(int f) const { return static_cast<int>(face_orbits_[f].size()); }

  void validate() const {
    const int n = dart_count();
    require(n % 2 == 0, ErrorCode::InternalInvariant, "odd dart count");
    std::vector<char> seen(n, 0);
    for (int d = 0; d < n; ++d) {
      require(alpha_[d] >= 0 && alpha_[d] < n && alpha_[d] != d, ErrorCode::InternalInvariant,
              "edge pairing has a fixed point or is out of range");
      require(alpha_[alpha_[d]] == d, ErrorCode::InternalInvariant, "edge pairing is not an involution");
      require(sigma_[d] >= 0 && sigma_[d] < n, ErrorCode::InternalInvariant, "rotation out of range");
      seen[sigma_[d]]++;
    }
    for (int d = 0; d < n; ++d)
      require(seen[d] == 1, ErrorCode::InternalInvariant, "rotation is not a permutation");
  }

  // A canonical code invariant under dart relabelling; reflections are
  // included so mirror-image embeddings compare equal as maps.
  std::vector<int> canonical_code() const {
    std::vector<int> best;
    for (int reflect = 0; reflect < 2; ++reflect) {
      std::vector<int> inv_sigma;
      if (reflect) {
        inv_sigma.assign(dart_count(), 0);
        for (int d = 0; d < dart_count(); ++d) inv_sigma[sigma_[d]] = d;
      }
      const std::vector<int>& rot = reflect ? inv_sigma : sigma_;
      for (int root = 0; root < dart_count(); ++root) {
        std::vector<int> code = code_from(root, rot);
        if (best.empty() || code < best) best = std::move(code);
      }
    }
    return best;
  }

  bool isomorphic_to(const CombinatorialMap& other) const {
    if (dart_count() != other.dart_count()) return false;
    return canonical_code() == other.canonical_code();
  }

 private:
  void rebuild() {
    const int n = dart_count();
    vertex_of_.assign(n, -1);
    face_of_.assign(n, -1);
    edge_of_.assign(n, -1);
    vertex_orbits_.clear();
    face_orbits_.clear();
    for (int d = 0; d < n; ++d) {
      if (vertex_of_[d] >= 0) continue;
      int id = static_cast<int>(vertex_orbits_.size());
      vertex_orbits_.emplace_back();
      int cur = d;
      do {
        vertex_of_[cur] = id;
        vertex_orbits_.back().push_back(cur);
        cur = sigma_[cur];
      } while (cur != d);
    }
    for (int d = 0; d < n; ++d) {
      if (face_of_[d] >= 0) continue;
      int id = static_cast<int>(face_orbits_.size());
      face_orbits_.emplace_back();
      int cur = d;
      do {
        face_of_[cur] = id;
        face_orbits_.back().push_back(cur);
        cur = phi(cur);
      } while (cur != d);
    }
    int edges = 0;
    for (int d = 0; d < n; ++d) {
      if (edge_of_[d] >= 0) continue;
      edge_of_[d] = edge_of_[alpha_[d]] = edges++;
    }
    vertex_count_ = static_cast<int>(vertex_orbits_.size());
    face_count_ = static_cast<int>(face_orbits_.size());
    UnionFind uf(vertex_count_);
    for (int d = 0; d < n; ++d) uf.unite(vertex_of_[d], vertex_of_[alpha_[d]]);
    component_count_ = n == 0 ? 0 : uf.count();
  }

  std::vector<int> code_from(int root, const std::vector<int>& rot) const {
    const int n = dart_count();
    std::vector<int> label(n, -1);
    std::vector<int> order;
    order.reserve(n);
    label[root] = 0;
    order.push_back(root);
    for (std::size_t i = 0; i < order.size(); ++i) {
      int d = order[i];
      for (int nd : {rot[d], alpha_[d]}) {
        if (label[nd] < 0) {
          label[nd] = static_cast<int>(order.size());
          order.push_back(nd);
        }
      }
    }
    std::vector<int> code;
    code.reserve(2 * n);
    for (int d : order) {
      code.push_back(label[rot[d]]);
      code.push_back(label[alpha_[d]]);
    }
    return code;
  }

  std::vector<int> sigma_;
  std::vector<int> alpha_;
  std::vector<int> vertex_of_, face_of_, edge_of_;
  std::vector<std::vector<int>> vertex_orbits_, face_orbits_;
  int vertex_count_ = 0, face_count_ = 0, component_count_ = 0;
};

}  // namespace statesurf
