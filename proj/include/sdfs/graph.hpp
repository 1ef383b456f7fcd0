// Copyright 2026 The semistream-dfs Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sdfs {

using VertexId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

/// The artificial root of a graph on `n` input vertices. It is adjacent to
/// every input vertex but never appears in an edge stream.
constexpr VertexId artificial_root(std::size_t n) { return static_cast<VertexId>(n); }

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Order-independent 64-bit key of an undirected pair.
inline std::uint64_t pair_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

inline std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

class TreeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Rooted tree over the ids [0, n] where id n is the artificial root.
///
/// Vertices are attached one at a time below a vertex already in the tree, so
/// the tree is connected from `root()` and `level(v) == level(parent(v)) + 1`
/// holds by construction. Children keep their insertion order.
class DfsTree {
 public:
  DfsTree() = default;

  /// A tree holding only `root`; `capacity` is the number of addressable ids.
  DfsTree(std::size_t capacity, VertexId root)
      : parent_(capacity, kNoVertex),
        level_(capacity, 0),
        children_(capacity),
        present_(capacity, false),
        root_(root) {
    check_id(root);
    present_[root] = true;
    size_ = 1;
  }

  VertexId root() const { return root_; }
  std::size_t capacity() const { return parent_.size(); }
  std::size_t size() const { return size_; }

  bool contains(VertexId v) const { return v < present_.size() && present_[v]; }

  VertexId parent(VertexId v) const {
    require(v);
    return parent_[v];
  }
  std::uint32_t level(VertexId v) const {
    require(v);
    return level_[v];
  }
  std::span<const VertexId> children(VertexId v) const {
    require(v);
    return children_[v];
  }

  void attach(VertexId child, VertexId parent) {
    check_id(child);
    require(parent);
    if (present_[child]) throw TreeError("vertex already in tree: " + std::to_string(child));
    present_[child] = true;
    parent_[child] = parent;
    level_[child] = level_[parent] + 1;
    children_[parent].push_back(child);
    ++size_;
  }

  std::uint32_t height() const {
    std::uint32_t h = 0;
    for (std::size_t v = 0; v < present_.size(); ++v)
      if (present_[v]) h = std::max(h, level_[v]);
    return h;
  }

 private:
  void check_id(VertexId v) const {
    if (v >= parent_.size()) throw TreeError("vertex id out of range: " + std::to_string(v));
  }
  void require(VertexId v) const {
    if (!contains(v)) throw TreeError("vertex not in tree: " + std::to_string(v));
  }

  std::vector<VertexId> parent_;
  std::vector<std::uint32_t> level_;
  std::vector<std::vector<VertexId>> children_;
  std::vector<bool> present_;
  VertexId root_ = kNoVertex;
  std::size_t size_ = 0;
};

/// True iff `a` lies on the root-to-`d` path (a == d counts).
inline bool is_ancestor(const DfsTree& tree, VertexId a, VertexId d) {
  std::uint32_t la = tree.level(a);
  std::uint32_t ld = tree.level(d);
  while (ld > la) {
    d = tree.parent(d);
    --ld;
  }
  return d == a;
}

inline VertexId lca(const DfsTree& tree, VertexId x, VertexId y) {
  std::uint32_t lx = tree.level(x);
  std::uint32_t ly = tree.level(y);
  while (lx > ly) x = tree.parent(x), --lx;
  while (ly > lx) y = tree.parent(y), --ly;
  while (x != y) {
    x = tree.parent(x);
    y = tree.parent(y);
  }
  return x;
}

inline std::uint32_t tree_height(const DfsTree& tree) { return tree.height(); }

/// Recomputes every level from parent pointers and compares with the stored
/// levels; also checks that children lists mirror the parent map.
inline bool tree_is_consistent(const DfsTree& tree) {
  for (VertexId v = 0; v < tree.capacity(); ++v) {
    if (!tree.contains(v)) continue;
    std::uint32_t depth = 0;
    VertexId cur = v;
    while (cur != tree.root()) {
      cur = tree.parent(cur);
      if (cur == kNoVertex || ++depth > tree.capacity()) return false;
    }
    if (depth != tree.level(v)) return false;
    for (VertexId c : tree.children(v))
      if (!tree.contains(c) || tree.parent(c) != v) return false;
    if (v != tree.root()) {
      auto siblings = tree.children(tree.parent(v));
      if (std::count(siblings.begin(), siblings.end(), v) != 1) return false;
    }
  }
  return true;
}

/// In-memory symmetric adjacency, used by the oracle DFS and the checker.
class AdjacencyGraph {
 public:
  AdjacencyGraph() = default;

  AdjacencyGraph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
    for (const Edge& e : edges) {
      if (e.u >= n || e.v >= n) throw std::out_of_range("edge endpoint out of range: " + to_string(e));
      if (e.u == e.v) continue;
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
      edges_.push_back(e);
    }
  }

  std::size_t n() const { return adjacency_.size(); }
  std::size_t m() const { return edges_.size(); }
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
  std::span<const Edge> edges() const { return edges_; }

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<Edge> edges_;
};

}  // namespace sdfs
