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
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sdfs/components.hpp"
#include "sdfs/run_state.hpp"

namespace sdfs {

/// Effective per-vertex edge allowance of a kPath pass. With the adaptive
/// budget the n·k edges are spread over the n* still-unvisited vertices.
inline std::uint64_t kpath_effective_k(const AlgoConfig& config, std::size_t n, std::size_t unvisited) {
  if (!config.budget_level_2() || unvisited == 0) return config.k;
  return static_cast<std::uint64_t>(n) * config.k / unvisited;
}

/// kPath: each pass buffers up to |V_C|(k-1) edges per component, runs a DFS
/// of T_C plus the buffer and, if the buffer overflowed, keeps only the path
/// to the deepest vertex; the rest of the pass splits C \ P by union-find.
class KPathRunner {
 public:
  explicit KPathRunner(RunState& rs)
      : rs_(rs),
        ws_(rs.n + 1),
        adj_(rs.n + 1),
        seen_(rs.n + 1, 0),
        on_path_(rs.n + 1, 0),
        dfs_parent_(rs.n + 1, kNoVertex),
        dfs_level_(rs.n + 1, 0),
        tree_parent_(rs.n + 1, kNoVertex) {}

  void run() {
    comps_ = initial_components(rs_);
    for (const Component& c : comps_) remember_tree(c);
    while (!comps_.empty()) pass();
  }

  /// Effective k of each pass run so far.
  const std::vector<std::uint64_t>& k_history() const { return k_history_; }

  /// Buffered edges that were already edges of T_C.
  std::uint64_t buffered_tree_edges() const { return buffered_tree_edges_; }

 private:
  enum class Phase { kCollect, kSplit, kDone };

  struct PassState {
    std::uint64_t quota = 0;
    std::vector<Edge> buffer;
    Phase phase = Phase::kCollect;
    std::optional<PathSplitter> splitter;
  };

  void remember_tree(const Component& c) {
    for (std::size_t i = 0; i < c.order.size(); ++i) tree_parent_[c.order[i]] = c.parents[i];
  }

  bool in_component_tree(const Edge& e) const { return tree_parent_[e.u] == e.v || tree_parent_[e.v] == e.u; }

  void pass() {
    rs_.begin_pass();
    std::size_t unvisited = 0;
    for (const Component& c : comps_) unvisited += c.vertices.size();
    std::uint64_t k_eff = kpath_effective_k(rs_.config, rs_.n, unvisited);
    k_history_.push_back(k_eff);

    states_.clear();
    states_.resize(comps_.size());
    for (std::size_t i = 0; i < comps_.size(); ++i) states_[i].quota = comps_[i].vertices.size() * (k_eff - 1);

    std::size_t active = comps_.size();
    const bool skip_tree_edges = rs_.config.budget_level_1();
    while (active > 0) {
      auto e = rs_.stream.next_edge();
      if (!e) break;
      Route route = rs_.registry.route_edge(*e);
      if (route.kind == Route::Kind::kVisited) continue;
      std::uint32_t c = route.component;
      PassState& st = states_[c];
      if (st.phase == Phase::kCollect) {
        if (skip_tree_edges && in_component_tree(*e)) continue;
        if (st.buffer.size() < st.quota) {
          if (in_component_tree(*e)) ++buffered_tree_edges_;
          st.buffer.push_back(*e);
          rs_.ledger.charge(1);
        } else {
          overflow(c, *e);
          if (st.phase == Phase::kDone) --active;
        }
      } else if (st.phase == Phase::kSplit) {
        apply(st.splitter->feed(e->u, e->v));
      }
    }

    std::vector<Component> next;
    for (std::size_t c = 0; c < comps_.size(); ++c) {
      PassState& st = states_[c];
      if (st.phase == Phase::kCollect) {
        append_whole(comps_[c], st);
      } else if (st.phase == Phase::kSplit) {
        for (SplitComponent& part : st.splitter->finish()) {
          if (part.vertices.size() == 1) {
            rs_.finalize_singleton(part.root, part.path_vertex);
            continue;
          }
          Component nc;
          OrientedTree t = orient_tree(part.root, part.vertices, part.tree_edges, adj_);
          nc.vertices = std::move(part.vertices);
          nc.order = std::move(t.order);
          nc.parents = std::move(t.parents);
          nc.root = part.root;
          nc.attach_parent = part.path_vertex;
          next.push_back(std::move(nc));
        }
        st.splitter.reset();
      }
    }
    rs_.registry.clear_paths();
    for (std::uint32_t i = 0; i < next.size(); ++i) {
      for (VertexId v : next[i].vertices) rs_.registry.assign(v, i);
      remember_tree(next[i]);
    }
    comps_ = std::move(next);
  }

  void apply(int delta) {
    if (delta > 0) rs_.ledger.charge(static_cast<std::uint64_t>(delta));
    else if (delta < 0) rs_.ledger.release(static_cast<std::uint64_t>(-delta));
  }

  /// DFS of T_C plus the buffer from r_C. Tree edges come first in each
  /// adjacency list, then buffered edges in stream order. Returns the first
  /// visited vertex of maximum depth.
  VertexId local_dfs(const Component& c, const std::vector<Edge>& buffer) {
    for (VertexId v : c.order) adj_[v].clear();
    for (std::size_t i = 1; i < c.order.size(); ++i) {
      adj_[c.parents[i]].push_back(c.order[i]);
      adj_[c.order[i]].push_back(c.parents[i]);
    }
    for (const Edge& e : buffer) {
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    dfs_order_.clear();
    stack_.clear();
    VertexId deepest = c.root;
    seen_[c.root] = 1;
    dfs_parent_[c.root] = kNoVertex;
    dfs_level_[c.root] = 0;
    dfs_order_.push_back(c.root);
    stack_.push_back({c.root, 0});
    while (!stack_.empty()) {
      VertexId u = stack_.back().first;
      std::size_t& i = stack_.back().second;
      if (i == adj_[u].size()) {
        stack_.pop_back();
        continue;
      }
      VertexId w = adj_[u][i++];
      if (seen_[w]) continue;
      seen_[w] = 1;
      dfs_parent_[w] = u;
      dfs_level_[w] = dfs_level_[u] + 1;
      if (dfs_level_[w] > dfs_level_[deepest]) deepest = w;
      dfs_order_.push_back(w);
      stack_.push_back({w, 0});
    }
    for (VertexId v : dfs_order_) seen_[v] = 0;
    if (dfs_order_.size() != c.order.size()) throw std::logic_error("component tree does not span its component");
    return deepest;
  }

  void attach_local(const Component& c, VertexId v) {
    if (v == c.root) {
      if (v != rs_.root) rs_.tree.attach(v, c.attach_parent);
    } else {
      rs_.tree.attach(v, dfs_parent_[v]);
    }
  }

  void append_whole(const Component& c, PassState& st) {
    local_dfs(c, st.buffer);
    for (VertexId v : dfs_order_) {
      attach_local(c, v);
      rs_.registry.mark_visited(v);
    }
    rs_.ledger.release(c.vertices.size() + st.buffer.size());
    st.buffer = {};
  }

  void overflow(std::uint32_t ci, const Edge& trigger) {
    const Component& c = comps_[ci];
    PassState& st = states_[ci];
    VertexId deepest = local_dfs(c, st.buffer);

    path_.clear();
    for (VertexId v = deepest; v != kNoVertex; v = dfs_parent_[v]) path_.push_back(v);
    std::reverse(path_.begin(), path_.end());
    path_levels_.clear();
    for (VertexId p : path_) {
      attach_local(c, p);
      rs_.registry.mark_path(p, ci);
      on_path_[p] = 1;
      path_levels_.push_back(rs_.tree.level(p));
    }
    residual_.clear();
    for (VertexId v : c.vertices)
      if (!on_path_[v]) residual_.push_back(v);
    for (VertexId p : path_) on_path_[p] = 0;

    std::uint64_t old_held = c.vertices.size() + st.buffer.size();
    if (residual_.empty()) {
      rs_.ledger.release(old_held);
      st.phase = Phase::kDone;
      st.buffer = {};
      return;
    }
    st.splitter.emplace(ws_, residual_, path_, path_levels_);
    std::int64_t held = 0;
    // Without H2 the buffer already holds every streamed edge of C seen so
    // far; only the artificial root edges are never streamed.
    for (std::size_t i = 1; i < c.order.size(); ++i)
      if (rs_.config.budget_level_1() || c.parents[i] == rs_.root)
        held += st.splitter->feed(c.order[i], c.parents[i]);
    for (const Edge& e : st.buffer) held += st.splitter->feed(e.u, e.v);
    held += st.splitter->feed(trigger.u, trigger.v);
    rs_.ledger.release(old_held);
    rs_.ledger.charge(static_cast<std::uint64_t>(held));
    st.buffer = {};
    st.phase = Phase::kSplit;
  }

  RunState& rs_;
  PathSplitter::Workspace ws_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<std::uint8_t> seen_;
  std::vector<std::uint8_t> on_path_;
  std::vector<VertexId> dfs_parent_;
  std::vector<std::uint32_t> dfs_level_;
  std::vector<VertexId> tree_parent_;
  std::vector<VertexId> dfs_order_;
  std::vector<std::pair<VertexId, std::size_t>> stack_;
  std::vector<VertexId> path_;
  std::vector<std::uint32_t> path_levels_;
  std::vector<VertexId> residual_;
  std::vector<Component> comps_;
  std::vector<PassState> states_;
  std::vector<std::uint64_t> k_history_;
  std::uint64_t buffered_tree_edges_ = 0;
};

}  // namespace sdfs
