#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace statesurf {

class UnionFind {
 public:
  UnionFind() = default;
  explicit UnionFind(int n) { reset(n); }

  void reset(int n) {
    parent_.resize(n);
    std::iota(parent_.begin(), parent_.end(), 0);
    size_.assign(n, 1);
    count_ = n;
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns true when the two classes were distinct.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --count_;
    return true;
  }

  bool same(int a, int b) { return find(a) == find(b); }
  int count() const { return count_; }
  int size() const { return static_cast<int>(parent_.size()); }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int count_ = 0;
};

// Union-find over Z/2-labelled elements: unite(a, b, p) asserts
// label(a) xor label(b) == p.  Used for orientation-consistency systems.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(int n) : parent_(n), rank_(n, 0), parity_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  // Returns root and parity of x relative to its root.
  std::pair<int, uint8_t> find(int x) {
    uint8_t p = 0;
    int root = x;
    while (parent_[root] != root) {
      p ^= parity_[root];
      root = parent_[root];
    }
    // Path compression with parity rewrite.
    int cur = x;
    uint8_t cur_p = p;
    while (parent_[cur] != cur) {
      int nxt = parent_[cur];
      uint8_t nxt_p = cur_p ^ parity_[cur];
      parent_[cur] = root;
      parity_[cur] = cur_p;
      cur = nxt;
      cur_p = nxt_p;
    }
    return {root, p};
  }

  // Returns false on contradiction.
  bool unite(int a, int b, uint8_t parity) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (uint8_t)(pa ^ pb) == parity;
    uint8_t link = pa ^ pb ^ parity;
    if (rank_[ra] < rank_[rb]) {
      std::swap(ra, rb);
    }
    parent_[rb] = ra;
    parity_[rb] = link;
    if (rank_[ra] == rank_[rb]) ++rank_[ra];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
  std::vector<uint8_t> parity_;
};

}  // namespace statesurf
