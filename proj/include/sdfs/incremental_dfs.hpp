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
#include <unordered_map>
#include <utility>
#include <vector>

#include "sdfs/graph.hpp"

namespace sdfs {

/// A forest of rooted trees over dense ids plus a set of retained non-tree
/// edges, repaired after every edge insertion so that each retained edge is
/// a back edge (the Maintain-DFS procedure).
///
/// Repair never moves a vertex closer to its root: a cross edge (x, y) with
/// level(x) >= level(y) cuts the subtree containing y below their LCA,
/// re-roots it at y and hangs it below x.
class IncrementalDfs {
 public:
  static constexpr std::uint32_t kNoEdge = std::numeric_limits<std::uint32_t>::max();

  struct StoredEdge {
    VertexId a = kNoVertex;
    VertexId b = kNoVertex;
    bool alive = false;
    bool pending = false;
  };

  explicit IncrementalDfs(std::size_t capacity)
      : parent_(capacity, kNoVertex),
        level_(capacity, 0),
        first_child_(capacity, kNoVertex),
        last_child_(capacity, kNoVertex),
        next_sibling_(capacity, kNoVertex),
        prev_sibling_(capacity, kNoVertex),
        incident_(capacity) {}

  std::size_t capacity() const { return parent_.size(); }

  // ---- tree structure ----

  /// Makes `v` a detached root at level 0. Its children are kept.
  void make_root(VertexId v) {
    if (parent_[v] != kNoVertex) unlink(v);
    level_[v] = 0;
  }

  /// Appends `child` (currently a root) as the last child of `parent` and
  /// sets its level. Levels below `child` are not touched.
  void link(VertexId child, VertexId parent) {
    if (parent_[child] != kNoVertex) throw std::logic_error("link: vertex already has a parent");
    parent_[child] = parent;
    prev_sibling_[child] = last_child_[parent];
    next_sibling_[child] = kNoVertex;
    if (last_child_[parent] == kNoVertex) first_child_[parent] = child;
    else next_sibling_[last_child_[parent]] = child;
    last_child_[parent] = child;
    level_[child] = level_[parent] + 1;
  }

  void unlink(VertexId child) {
    VertexId p = parent_[child];
    if (p == kNoVertex) return;
    VertexId prev = prev_sibling_[child];
    VertexId next = next_sibling_[child];
    if (prev == kNoVertex) first_child_[p] = next;
    else next_sibling_[prev] = next;
    if (next == kNoVertex) last_child_[p] = prev;
    else prev_sibling_[next] = prev;
    parent_[child] = prev_sibling_[child] = next_sibling_[child] = kNoVertex;
  }

  VertexId parent(VertexId v) const { return parent_[v]; }
  std::uint32_t level(VertexId v) const { return level_[v]; }
  VertexId first_child(VertexId v) const { return first_child_[v]; }
  VertexId next_sibling(VertexId v) const { return next_sibling_[v]; }

  /// The only child of `v`, or kNoVertex when `v` has zero or several.
  VertexId sole_child(VertexId v) const {
    VertexId c = first_child_[v];
    return (c != kNoVertex && next_sibling_[c] == kNoVertex) ? c : kNoVertex;
  }

  std::vector<VertexId> children(VertexId v) const {
    std::vector<VertexId> out;
    for (VertexId c = first_child_[v]; c != kNoVertex; c = next_sibling_[c]) out.push_back(c);
    return out;
  }

  bool is_ancestor(VertexId a, VertexId d) const {
    if (level_[a] > level_[d]) return false;
    while (level_[d] > level_[a]) d = parent_[d];
    return a == d;
  }

  VertexId ancestor_at_level(VertexId v, std::uint32_t lev) const {
    while (level_[v] > lev) v = parent_[v];
    return v;
  }

  VertexId lca(VertexId x, VertexId y) const {
    while (level_[x] > level_[y]) x = parent_[x];
    while (level_[y] > level_[x]) y = parent_[y];
    while (x != y) {
      x = parent_[x];
      y = parent_[y];
      if (x == kNoVertex || y == kNoVertex) throw std::logic_error("lca: vertices are in different trees");
    }
    return x;
  }

  VertexId root_of(VertexId v) const {
    while (parent_[v] != kNoVertex) v = parent_[v];
    return v;
  }

  /// Recomputes levels below `top` from parent pointers and appends the
  /// subtree to `out` in preorder.
  void relevel_subtree(VertexId top, std::vector<VertexId>& out) {
    std::size_t begin = out.size();
    out.push_back(top);
    for (std::size_t i = begin; i < out.size(); ++i) {
      VertexId u = out[i];
      for (VertexId c = first_child_[u]; c != kNoVertex; c = next_sibling_[c]) {
        level_[c] = level_[u] + 1;
        out.push_back(c);
      }
    }
  }

  /// Preorder (children in list order) of the subtree at `top`.
  void preorder(VertexId top, std::vector<VertexId>& out) const {
    stack_.clear();
    stack_.push_back(top);
    while (!stack_.empty()) {
      VertexId u = stack_.back();
      stack_.pop_back();
      out.push_back(u);
      std::size_t mark = stack_.size();
      for (VertexId c = first_child_[u]; c != kNoVertex; c = next_sibling_[c]) stack_.push_back(c);
      std::reverse(stack_.begin() + static_cast<std::ptrdiff_t>(mark), stack_.end());
    }
  }

  // ---- retained non-tree edges ----

  bool is_tree_edge(VertexId a, VertexId b) const { return parent_[a] == b || parent_[b] == a; }
  bool is_stored(VertexId a, VertexId b) const { return by_pair_.count(pair_key(a, b)) != 0; }

  std::uint32_t store(VertexId a, VertexId b) {
    auto [it, inserted] = by_pair_.emplace(pair_key(a, b), static_cast<std::uint32_t>(edges_.size()));
    if (!inserted) throw std::logic_error("edge stored twice: " + to_string(Edge{a, b}));
    edges_.push_back(StoredEdge{a, b, true, false});
    incident_[a].push_back(it->second);
    incident_[b].push_back(it->second);
    ++alive_;
    return it->second;
  }

  void erase(std::uint32_t id) {
    StoredEdge& e = edges_[id];
    if (!e.alive) throw std::logic_error("erasing a dead edge");
    e.alive = false;
    e.pending = false;
    by_pair_.erase(pair_key(e.a, e.b));
    --alive_;
  }

  const StoredEdge& edge(std::uint32_t id) const { return edges_[id]; }
  std::size_t stored_count() const { return alive_; }

  /// Live stored edges incident to `v`; compacts the list as a side effect.
  const std::vector<std::uint32_t>& incident(VertexId v) {
    auto& list = incident_[v];
    std::erase_if(list, [&](std::uint32_t id) { return !edges_[id].alive; });
    return list;
  }

  /// Drops every stored edge. Ids are not reused between clears.
  void clear_edges() {
    for (const StoredEdge& e : edges_) {
      if (e.a != kNoVertex) incident_[e.a].clear();
      if (e.b != kNoVertex) incident_[e.b].clear();
    }
    edges_.clear();
    by_pair_.clear();
    alive_ = 0;
  }

  /// True iff one endpoint is an ancestor of the other; `handle_level` lets a
  /// caller vouch that every vertex at or above that level of this tree lies
  /// on one root path.
  bool is_back_edge(VertexId a, VertexId b, std::uint32_t handle_level = 0) const {
    if (level_[a] < level_[b]) std::swap(a, b);
    if (level_[b] <= handle_level) return true;
    return is_ancestor(b, a);
  }

  /// Stored, non-pending edges that are currently cross edges.
  std::vector<std::uint32_t> cross_edges() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t id = 0; id < edges_.size(); ++id) {
      const StoredEdge& e = edges_[id];
      if (e.alive && !e.pending && !is_back_edge(e.a, e.b)) out.push_back(id);
    }
    return out;
  }

  /// Inserts (a, b) and repairs the forest. Both endpoints must be in the
  /// same tree. The policy decides what is retained:
  ///   handle_level(v)        levels <= this in v's tree form a single path
  ///   skip_cross(x, y, w)    true to ignore cross edge (x, y) with LCA w
  ///   admit(a, b)            back edge not currently stored; may store it
  ///   keep(id)               stored edge is a back edge; may erase it
  ///   promote(id) / drop(id) stored edge becomes a tree edge / is skipped;
  ///                          the policy must erase it
  ///   moved(vertices)        levels of these vertices just changed
  template <class Policy>
  void insert(VertexId a, VertexId b, Policy& policy) {
    work_.clear();
    work_.push_back({a, b, kNoEdge});
    std::uint64_t h = alive_ + capacity() + 1;
    std::uint64_t bound = h * h + 16;
    std::uint64_t iterations = 0;
    while (!work_.empty()) {
      Item it = work_.back();
      work_.pop_back();
      if (it.id != kNoEdge) {
        StoredEdge& se = edges_[it.id];
        if (!se.alive) continue;
        se.pending = false;
      }
      if (++iterations > bound) throw std::logic_error("edge insertion repair did not terminate");
      VertexId x = it.a, y = it.b;
      if (level_[x] < level_[y]) std::swap(x, y);
      VertexId w = level_[y] <= policy.handle_level(y) ? y : lca(x, y);
      if (w == x || w == y) {
        if (it.id == kNoEdge) policy.admit(x, y);
        else policy.keep(it.id);
        continue;
      }
      if (policy.skip_cross(x, y, w)) {
        if (it.id != kNoEdge) policy.drop(it.id);
        continue;
      }
      if (it.id != kNoEdge) policy.promote(it.id);

      VertexId v = ancestor_at_level(y, level_[w] + 1);
      path_.clear();
      for (VertexId c = y;; c = parent_[c]) {
        path_.push_back(c);
        if (c == v) break;
      }
      for (VertexId c : path_) unlink(c);
      for (std::size_t i = 0; i + 1 < path_.size(); ++i) link(path_[i + 1], path_[i]);
      link(y, x);
      moved_.clear();
      relevel_subtree(y, moved_);
      policy.moved(std::span<const VertexId>(moved_));
      policy.admit(w, v);

      for (std::size_t mi = 0; mi < moved_.size(); ++mi) {
        VertexId u = moved_[mi];
        const auto& list = incident(u);
        for (std::size_t j = 0; j < list.size(); ++j) {
          std::uint32_t id = list[j];
          StoredEdge& se = edges_[id];
          if (!se.alive || se.pending) continue;
          if (is_back_edge(se.a, se.b, policy.handle_level(se.a))) {
            policy.keep(id);
          } else {
            se.pending = true;
            work_.push_back({se.a, se.b, id});
          }
        }
      }
    }
  }

 private:
  struct Item {
    VertexId a;
    VertexId b;
    std::uint32_t id;
  };

  std::vector<VertexId> parent_;
  std::vector<std::uint32_t> level_;
  std::vector<VertexId> first_child_;
  std::vector<VertexId> last_child_;
  std::vector<VertexId> next_sibling_;
  std::vector<VertexId> prev_sibling_;

  std::vector<StoredEdge> edges_;
  std::vector<std::vector<std::uint32_t>> incident_;
  std::unordered_map<std::uint64_t, std::uint32_t> by_pair_;
  std::size_t alive_ = 0;

  std::vector<Item> work_;
  std::vector<VertexId> path_;
  std::vector<VertexId> moved_;
  mutable std::vector<VertexId> stack_;
};

/// Retains every non-tree edge: plain Maintain-DFS on an unbounded H_C.
struct RetainAll {
  IncrementalDfs* dfs;

  std::uint32_t handle_level(VertexId) const { return 0; }
  bool skip_cross(VertexId, VertexId, VertexId) const { return false; }
  void admit(VertexId a, VertexId b) {
    if (!dfs->is_tree_edge(a, b) && !dfs->is_stored(a, b)) dfs->store(a, b);
  }
  void keep(std::uint32_t) {}
  void promote(std::uint32_t id) { dfs->erase(id); }
  void drop(std::uint32_t id) { dfs->erase(id); }
  void moved(std::span<const VertexId>) {}
};

}  // namespace sdfs
