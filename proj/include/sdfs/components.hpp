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
#include <vector>

#include "sdfs/graph.hpp"

namespace sdfs {

/// Disjoint sets over [0, capacity) with union by size and path compression.
/// Elements are inert until make_set() so one instance can be reused across
/// many small, disjoint vertex sets.
class UnionFind {
 public:
  explicit UnionFind(std::size_t capacity = 0) : parent_(capacity), size_(capacity, 1) {
    for (std::size_t i = 0; i < capacity; ++i) parent_[i] = static_cast<VertexId>(i);
  }

  void make_set(VertexId v) {
    parent_[v] = v;
    size_[v] = 1;
  }

  VertexId find(VertexId v) {
    VertexId root = v;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[v] != root) {
      VertexId next = parent_[v];
      parent_[v] = root;
      v = next;
    }
    return root;
  }

  /// Merges the classes of a and b. Returns false if they were already one.
  bool unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  std::uint32_t class_size(VertexId v) { return size_[find(v)]; }

 private:
  std::vector<VertexId> parent_;
  std::vector<std::uint32_t> size_;
};

/// Replays `merges` through `uf` and returns the edges that joined two
/// classes, i.e. a spanning forest of the replayed edges.
inline std::vector<Edge> spanning_tree_of_merges(UnionFind& uf, std::span<const Edge> merges) {
  std::vector<Edge> tree;
  for (const Edge& e : merges)
    if (uf.unite(e.u, e.v)) tree.push_back(e);
  return tree;
}

/// Orients an undirected spanning tree away from `root`. Returns parent[v]
/// for the listed vertices in BFS order of discovery; throws if the edges
/// do not span `vertices`.
struct OrientedTree {
  std::vector<VertexId> order;    // BFS order, root first
  std::vector<VertexId> parents;  // parents[i] is the parent of order[i]
};

inline OrientedTree orient_tree(VertexId root, std::span<const VertexId> vertices, std::span<const Edge> edges,
                                std::vector<std::vector<VertexId>>& scratch_adj) {
  for (VertexId v : vertices) scratch_adj[v].clear();
  for (const Edge& e : edges) {
    scratch_adj[e.u].push_back(e.v);
    scratch_adj[e.v].push_back(e.u);
  }
  OrientedTree out;
  out.order.reserve(vertices.size());
  out.parents.reserve(vertices.size());
  out.order.push_back(root);
  out.parents.push_back(kNoVertex);
  for (std::size_t i = 0; i < out.order.size(); ++i) {
    VertexId u = out.order[i];
    for (VertexId w : scratch_adj[u])
      if (w != out.parents[i]) {
        out.order.push_back(w);
        out.parents.push_back(u);
      }
  }
  if (out.order.size() != vertices.size()) throw std::logic_error("spanning tree does not span its component");
  return out;
}

/// A connected component of the unvisited graph.
struct Component {
  std::vector<VertexId> vertices;
  /// Spanning tree T_C as parent pointers, root first (parents[0] == kNoVertex).
  std::vector<VertexId> order;
  std::vector<VertexId> parents;
  VertexId root = kNoVertex;
  /// Vertex of the partial DFS tree the root will hang from; kNoVertex for
  /// the artificial root itself.
  VertexId attach_parent = kNoVertex;
};

/// One piece of C \ P together with the lowest edge joining it to P.
struct SplitComponent {
  std::vector<VertexId> vertices;
  std::vector<Edge> tree_edges;
  VertexId path_vertex = kNoVertex;  // x_i, on the path
  VertexId root = kNoVertex;         // y_i, inside the piece
};

/// Incrementally splits a component after a root-to-descendant path P has
/// been removed: union-find over C \ P and, per class, the C_i-to-P edge whose
/// path endpoint is deepest (first seen wins ties).
///
/// Storage is borrowed from a run-wide workspace so many splitters over
/// disjoint vertex sets stay O(|C|) each.
class PathSplitter {
 public:
  struct Workspace {
    explicit Workspace(std::size_t capacity)
        : uf(capacity), role(capacity, kOther), path_level(capacity, 0), best(capacity), adjacency(capacity) {}

    UnionFind uf;
    std::vector<std::uint8_t> role;
    std::vector<std::uint32_t> path_level;
    struct Lowest {
      VertexId path_vertex = kNoVertex;
      VertexId inner = kNoVertex;
      std::uint32_t level = 0;
      std::uint64_t seq = 0;
    };
    std::vector<Lowest> best;
    std::vector<std::vector<VertexId>> adjacency;
  };

  /// `path_levels[i]` is the level of `path[i]` in the partial DFS tree.
  PathSplitter(Workspace& ws, std::span<const VertexId> residual, std::span<const VertexId> path,
               std::span<const std::uint32_t> path_levels)
      : ws_(&ws), residual_(residual.begin(), residual.end()), path_(path.begin(), path.end()) {
    for (VertexId v : residual_) {
      ws.uf.make_set(v);
      ws.role[v] = kResidual;
      ws.best[v] = {};
    }
    for (std::size_t i = 0; i < path_.size(); ++i) {
      ws.role[path_[i]] = kPath;
      ws.path_level[path_[i]] = path_levels[i];
    }
  }

  PathSplitter(const PathSplitter&) = delete;
  PathSplitter& operator=(const PathSplitter&) = delete;
  PathSplitter(PathSplitter&& other) noexcept { *this = std::move(other); }
  PathSplitter& operator=(PathSplitter&& other) noexcept {
    ws_ = other.ws_;
    residual_ = std::move(other.residual_);
    path_ = std::move(other.path_);
    forest_ = std::move(other.forest_);
    seq_ = other.seq_;
    other.ws_ = nullptr;
    return *this;
  }
  ~PathSplitter() { reset_roles(); }

  bool owns(VertexId v) const { return ws_->role[v] != kOther; }
  bool in_residual(VertexId v) const { return ws_->role[v] == kResidual; }

  /// Feeds one edge with both endpoints in C. Returns the change in the
  /// number of edges the splitter holds (forest edges plus one lowest edge per
  /// class): +1, 0 or -1.
  int feed(VertexId a, VertexId b) {
    ++seq_;
    auto& role = ws_->role;
    if (role[a] == kPath && role[b] == kPath) return 0;
    if (role[a] == kPath) std::swap(a, b);
    if (role[b] == kPath) {
      if (role[a] != kResidual) return 0;
      return offer(ws_->uf.find(a), {b, a, ws_->path_level[b], seq_});
    }
    if (role[a] != kResidual || role[b] != kResidual) return 0;
    VertexId ra = ws_->uf.find(a);
    VertexId rb = ws_->uf.find(b);
    if (ra == rb) return 0;
    auto la = ws_->best[ra];
    auto lb = ws_->best[rb];
    ws_->uf.unite(ra, rb);
    forest_.push_back(Edge{a, b});
    VertexId root = ws_->uf.find(ra);
    int delta = 1;
    ws_->best[root] = {};
    bool ha = la.path_vertex != kNoVertex;
    bool hb = lb.path_vertex != kNoVertex;
    if (ha && hb) {
      ws_->best[root] = better(la, lb) ? la : lb;
      delta -= 1;
    } else if (ha) {
      ws_->best[root] = la;
    } else if (hb) {
      ws_->best[root] = lb;
    }
    return delta;
  }

  /// Number of edges held right now.
  std::size_t held() const {
    std::size_t lowest = 0;
    for (VertexId v : residual_)
      if (ws_->uf.find(v) == v && ws_->best[v].path_vertex != kNoVertex) ++lowest;
    return forest_.size() + lowest;
  }

  /// Groups C \ P into its components. Throws if a piece has no edge to P.
  std::vector<SplitComponent> finish() {
    std::vector<SplitComponent> out;
    std::vector<std::uint32_t> slot_of_root;
    std::vector<VertexId> roots;
    for (VertexId v : residual_) {
      VertexId r = ws_->uf.find(v);
      if (r == v) {
        if (ws_->best[r].path_vertex == kNoVertex)
          throw std::logic_error("component disconnected from path at vertex " + std::to_string(v));
        roots.push_back(r);
      }
    }
    // Temporarily reuse path_level as a slot index for class roots.
    for (std::size_t i = 0; i < roots.size(); ++i) {
      ws_->path_level[roots[i]] = static_cast<std::uint32_t>(i);
      SplitComponent c;
      c.path_vertex = ws_->best[roots[i]].path_vertex;
      c.root = ws_->best[roots[i]].inner;
      out.push_back(std::move(c));
    }
    for (VertexId v : residual_) out[ws_->path_level[ws_->uf.find(v)]].vertices.push_back(v);
    for (const Edge& e : forest_) out[ws_->path_level[ws_->uf.find(e.u)]].tree_edges.push_back(e);
    reset_roles();
    return out;
  }

 private:
  static constexpr std::uint8_t kOther = 0;
  static constexpr std::uint8_t kResidual = 1;
  static constexpr std::uint8_t kPath = 2;

  using Lowest = Workspace::Lowest;

  static bool better(const Lowest& a, const Lowest& b) {
    if (a.level != b.level) return a.level > b.level;
    return a.seq < b.seq;
  }

  int offer(VertexId root, Lowest cand) {
    Lowest& cur = ws_->best[root];
    if (cur.path_vertex == kNoVertex) {
      cur = cand;
      return 1;
    }
    if (better(cand, cur)) cur = cand;
    return 0;
  }

  void reset_roles() {
    if (!ws_) return;
    for (VertexId v : residual_) ws_->role[v] = kOther;
    for (VertexId v : path_) ws_->role[v] = kOther;
    residual_.clear();
    path_.clear();
  }

  Workspace* ws_ = nullptr;
  std::vector<VertexId> residual_;
  std::vector<VertexId> path_;
  std::vector<Edge> forest_;
  std::uint64_t seq_ = 0;
};

/// One-shot form of PathSplitter. `path_levels[i]` is the level of path[i];
/// `edges` is every edge of C in the order it would be processed.
inline std::vector<SplitComponent> split_after_path(std::span<const VertexId> component_vertices,
                                                    std::span<const VertexId> path,
                                                    std::span<const std::uint32_t> path_levels,
                                                    std::span<const Edge> edges) {
  VertexId max_id = 0;
  for (VertexId v : component_vertices) max_id = std::max(max_id, v);
  PathSplitter::Workspace ws(static_cast<std::size_t>(max_id) + 1);
  std::vector<VertexId> residual;
  std::vector<bool> on_path(static_cast<std::size_t>(max_id) + 1, false);
  for (VertexId v : path) on_path.at(v) = true;
  for (VertexId v : component_vertices)
    if (!on_path[v]) residual.push_back(v);
  PathSplitter splitter(ws, residual, path, path_levels);
  for (const Edge& e : edges) splitter.feed(e.u, e.v);
  return splitter.finish();
}

/// Which live component an edge belongs to.
struct Route {
  enum class Kind { kVisited, kComponent, kPathEdge };
  Kind kind = Kind::kVisited;
  std::uint32_t component = 0;
};

/// Maps unvisited vertices to their component. During a pass, vertices that
/// were just moved onto a component's path keep a back-reference so edges
/// from the rest of the component to the path can still be routed.
class ComponentRegistry {
 public:
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  explicit ComponentRegistry(std::size_t capacity) : owner_(capacity, kNone), path_owner_(capacity, kNone) {}

  void assign(VertexId v, std::uint32_t component) { owner_[v] = component; }
  void mark_visited(VertexId v) { owner_[v] = kNone; }
  void mark_path(VertexId v, std::uint32_t component) {
    owner_[v] = kNone;
    path_owner_[v] = component;
    path_marked_.push_back(v);
  }
  void clear_paths() {
    for (VertexId v : path_marked_) path_owner_[v] = kNone;
    path_marked_.clear();
  }
  std::uint32_t owner(VertexId v) const { return owner_[v]; }

  Route route_edge(const Edge& e) const {
    std::uint32_t a = owner_[e.u];
    std::uint32_t b = owner_[e.v];
    if (a != kNone && b != kNone) {
      if (a != b)
        throw std::logic_error("edge " + to_string(e) + " joins two live components " + std::to_string(a) + " and " +
                               std::to_string(b));
      return {Route::Kind::kComponent, a};
    }
    if (a != kNone && path_owner_[e.v] == a) return {Route::Kind::kPathEdge, a};
    if (b != kNone && path_owner_[e.u] == b) return {Route::Kind::kPathEdge, b};
    return {};
  }

 private:
  std::vector<std::uint32_t> owner_;
  std::vector<std::uint32_t> path_owner_;
  std::vector<VertexId> path_marked_;
};

}  // namespace sdfs
