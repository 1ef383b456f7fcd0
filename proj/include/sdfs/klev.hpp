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
#include <vector>

#include "sdfs/incremental_dfs.hpp"
#include "sdfs/run_state.hpp"

namespace sdfs {

/// Deepest vertex d reachable from `current` such that every vertex above d
/// has exactly one child.
inline VertexId advance_broomstick(const IncrementalDfs& dfs, VertexId current) {
  for (VertexId c; (c = dfs.sole_child(current)) != kNoVertex;) current = c;
  return current;
}

/// kLev: each pass streams the edges of every component through Maintain-DFS
/// while retaining back edges to the top levels, then appends the part of
/// T_C that can no longer change.
///
/// The safe level t bounds which back edges are retained (upper endpoint at
/// local level 1..t-1). It is k for the O/1 variants. With H2 it starts
/// unbounded and drops when the per-component quota |V_C|(k-1) overflows:
/// the retained edge with the deepest upper endpoint u is evicted and t
/// becomes level(u)-1. Vertices that move while at or below level t are
/// marked and withheld, together with their subtrees.
class KLevRunner {
 public:
  static constexpr std::uint32_t kUnbounded = std::numeric_limits<std::uint32_t>::max();

  explicit KLevRunner(RunState& rs)
      : rs_(rs),
        dfs_(rs.n + 1),
        marks_(rs.config.marked_vertices()),
        drop_handle_(rs.config.budget_level_2()),
        adaptive_(rs.config.budget_level_1()),
        marked_(rs.n + 1, 0),
        changed_(rs.n + 1, 0) {}

  void run() {
    for (Component& c : initial_components(rs_)) {
      dfs_.make_root(c.root);
      for (std::size_t i = 1; i < c.order.size(); ++i) dfs_.link(c.order[i], c.parents[i]);
      comps_.push_back(Comp{c.root, c.attach_parent, c.vertices.size()});
    }
    while (!comps_.empty()) pass();
  }

  /// Final safe level of every component of every pass, for inspection.
  const std::vector<std::vector<std::uint32_t>>& safe_levels() const { return safe_history_; }

 private:
  struct Comp {
    VertexId root = kNoVertex;
    VertexId attach = kNoVertex;
    std::size_t size = 0;  // vertices other than the artificial root

    std::uint32_t safe = kUnbounded;
    std::uint64_t quota = 0;
    std::uint64_t stored = 0;
    VertexId broom = kNoVertex;
    std::vector<std::uint32_t> edge_ids;
    std::vector<VertexId> changed;
  };

  struct Policy {
    KLevRunner* self;
    std::uint32_t c;

    std::uint32_t handle_level(VertexId) const { return self->dfs_.level(self->comps_[c].broom); }
    bool skip_cross(VertexId, VertexId, VertexId w) const {
      return !self->marks_ && self->dfs_.level(w) >= self->comps_[c].safe;
    }
    void admit(VertexId a, VertexId b) { self->admit(c, a, b); }
    void keep(std::uint32_t id) { self->keep(c, id); }
    void promote(std::uint32_t id) { self->unstore(c, id); }
    void drop(std::uint32_t id) { self->unstore(c, id); }
    void moved(std::span<const VertexId> vs) { self->moved(c, vs); }
  };

  std::uint32_t upper_level(VertexId a, VertexId b) const { return std::min(dfs_.level(a), dfs_.level(b)); }

  bool retainable(const Comp& comp, VertexId a, VertexId b) const {
    std::uint32_t lev = upper_level(a, b);
    if (lev == 0 || lev >= comp.safe) return false;
    return !(drop_handle_ && lev < dfs_.level(comp.broom));
  }

  void store_edge(std::uint32_t c, VertexId a, VertexId b) {
    rs_.ledger.charge(1);
    comps_[c].edge_ids.push_back(dfs_.store(a, b));
    ++comps_[c].stored;
  }

  void unstore(std::uint32_t c, std::uint32_t id) {
    dfs_.erase(id);
    --comps_[c].stored;
    rs_.ledger.release(1);
  }

  void admit(std::uint32_t c, VertexId a, VertexId b) {
    if (dfs_.is_tree_edge(a, b) || dfs_.is_stored(a, b)) return;
    Comp& comp = comps_[c];
    if (!retainable(comp, a, b)) return;
    if (comp.stored < comp.quota) store_edge(c, a, b);
    else evict(c, a, b);
  }

  void keep(std::uint32_t c, std::uint32_t id) {
    const auto& e = dfs_.edge(id);
    if (!retainable(comps_[c], e.a, e.b)) unstore(c, id);
  }

  /// Quota is full and (a, b) wants in: evict the edge with the deepest upper
  /// endpoint, the candidate included, and lower the safe level to match.
  void evict(std::uint32_t c, VertexId a, VertexId b) {
    Comp& comp = comps_[c];
    std::erase_if(comp.edge_ids, [&](std::uint32_t id) { return !dfs_.edge(id).alive; });
    std::uint32_t worst_level = upper_level(a, b);
    std::uint32_t worst = IncrementalDfs::kNoEdge;
    for (std::uint32_t id : comp.edge_ids) {
      const auto& e = dfs_.edge(id);
      if (e.pending) continue;
      std::uint32_t lev = upper_level(e.a, e.b);
      if (lev > worst_level) {
        worst_level = lev;
        worst = id;
      }
    }
    if (worst != IncrementalDfs::kNoEdge) {
      unstore(c, worst);
      store_edge(c, a, b);
    }
    lower_safe_level(c, std::max<std::uint32_t>(1, worst_level - 1));
  }

  void lower_safe_level(std::uint32_t c, std::uint32_t t) {
    Comp& comp = comps_[c];
    if (t >= comp.safe) return;
    comp.safe = t;
    for (std::uint32_t id : comp.edge_ids) {
      const auto& e = dfs_.edge(id);
      if (e.alive && !e.pending && !retainable(comp, e.a, e.b)) unstore(c, id);
    }
    if (!marks_) return;
    for (VertexId v : comp.changed)
      if (!marked_[v] && dfs_.level(v) >= t) mark_subtree(v);
  }

  void mark_subtree(VertexId v) {
    stack_.clear();
    stack_.push_back(v);
    while (!stack_.empty()) {
      VertexId u = stack_.back();
      stack_.pop_back();
      if (marked_[u]) continue;
      marked_[u] = 1;
      marked_list_.push_back(u);
      for (VertexId ch = dfs_.first_child(u); ch != kNoVertex; ch = dfs_.next_sibling(ch)) stack_.push_back(ch);
    }
  }

  void moved(std::uint32_t c, std::span<const VertexId> vs) {
    Comp& comp = comps_[c];
    for (VertexId v : vs) {
      if (!changed_[v]) {
        changed_[v] = 1;
        comp.changed.push_back(v);
      }
      if (marks_ && !marked_[v] && dfs_.level(v) >= comp.safe) {
        marked_[v] = 1;
        marked_list_.push_back(v);
      }
    }
    advance_handle(c);
  }

  void advance_handle(std::uint32_t c) {
    Comp& comp = comps_[c];
    for (VertexId next; (next = dfs_.sole_child(comp.broom)) != kNoVertex;) {
      if (drop_handle_) {
        const auto& list = dfs_.incident(comp.broom);
        for (std::size_t i = 0; i < list.size(); ++i)
          if (dfs_.edge(list[i]).alive) unstore(c, list[i]);
      }
      comp.broom = next;
    }
  }

  bool in_output(const Comp& comp, VertexId v) const {
    return marks_ ? !marked_[v] : dfs_.level(v) < comp.safe;
  }

  void pass() {
    rs_.begin_pass();
    for (std::uint32_t c = 0; c < comps_.size(); ++c) {
      Comp& comp = comps_[c];
      comp.safe = adaptive_ ? kUnbounded : rs_.config.k;
      comp.quota = comp.size * (rs_.config.k - 1);
      comp.stored = 0;
      comp.edge_ids.clear();
      comp.changed.clear();
      comp.broom = comp.root;
      advance_handle(c);
    }

    while (auto e = rs_.stream.next_edge()) {
      Route route = rs_.registry.route_edge(*e);
      if (route.kind != Route::Kind::kComponent) continue;
      Policy policy{this, route.component};
      dfs_.insert(e->u, e->v, policy);
    }

    std::vector<std::uint32_t> safe_now;
    std::vector<Comp> next;
    std::vector<std::vector<VertexId>> next_vertices;
    std::uint64_t stored = 0;
    for (Comp& comp : comps_) {
      safe_now.push_back(comp.safe);
      stored += comp.stored;
      emit(comp, next, next_vertices);
    }
    safe_history_.push_back(std::move(safe_now));
    rs_.ledger.release(stored);
    dfs_.clear_edges();
    for (Comp& comp : comps_)
      for (VertexId v : comp.changed) changed_[v] = 0;
    for (VertexId v : marked_list_) marked_[v] = 0;
    marked_list_.clear();
    for (std::uint32_t i = 0; i < next.size(); ++i)
      for (VertexId v : next_vertices[i]) rs_.registry.assign(v, i);
    comps_ = std::move(next);
  }

  /// Appends the retained top of `comp` to the output tree and turns every
  /// withheld subtree into a component of the next pass.
  void emit(const Comp& comp, std::vector<Comp>& next, std::vector<std::vector<VertexId>>& next_vertices) {
    std::vector<VertexId> todo{comp.root};
    while (!todo.empty()) {
      VertexId v = todo.back();
      todo.pop_back();
      if (v == comp.root) {
        if (v != rs_.root) rs_.tree.attach(v, comp.attach);
      } else {
        rs_.tree.attach(v, dfs_.parent(v));
      }
      rs_.registry.mark_visited(v);
      if (v != rs_.root) rs_.ledger.release(1);

      std::vector<VertexId> kids = dfs_.children(v);
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
        VertexId ch = *it;
        if (in_output(comp, ch)) {
          todo.push_back(ch);
          continue;
        }
        std::vector<VertexId> sub;
        dfs_.preorder(ch, sub);
        dfs_.make_root(ch);
        scratch_.clear();
        dfs_.relevel_subtree(ch, scratch_);
        if (sub.size() == 1) {
          rs_.finalize_singleton(ch, v);
          continue;
        }
        next.push_back(Comp{ch, v, sub.size()});
        next_vertices.push_back(std::move(sub));
      }
    }
  }

  RunState& rs_;
  IncrementalDfs dfs_;
  bool marks_;
  bool drop_handle_;
  bool adaptive_;
  std::vector<std::uint8_t> marked_;
  std::vector<std::uint8_t> changed_;
  std::vector<VertexId> marked_list_;
  std::vector<VertexId> stack_;
  std::vector<VertexId> scratch_;
  std::vector<Comp> comps_;
  std::vector<std::vector<std::uint32_t>> safe_history_;
};

}  // namespace sdfs
