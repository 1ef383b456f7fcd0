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

#include <cstdint>
#include <limits>
#include <vector>

#include "sdfs/components.hpp"
#include "sdfs/run_state.hpp"

namespace sdfs {

/// Simp: every pass finds the deepest tree vertex x with an unvisited
/// neighbour y and hangs y below x, then keeps extending the new branch
/// through one remembered unvisited neighbour per vertex. When only r
/// qualifies, unvisited vertices with no unvisited neighbour are hung below
/// r in the same pass.
inline void run_simp_on(RunState& rs) {
  const std::size_t n = rs.n;
  std::vector<VertexId> next(n, kNoVertex);
  std::vector<std::uint8_t> linked(n, 0);
  while (rs.unvisited() > 0) {
    rs.begin_pass();
    std::fill(next.begin(), next.end(), kNoVertex);
    std::fill(linked.begin(), linked.end(), 0);
    std::uint64_t held = 0;
    VertexId best_x = kNoVertex, best_y = kNoVertex;
    std::uint32_t best_level = 0;
    while (auto e = rs.stream.next_edge()) {
      bool in_u = rs.tree.contains(e->u), in_v = rs.tree.contains(e->v);
      if (in_u != in_v) {
        VertexId x = in_u ? e->u : e->v;
        VertexId y = in_u ? e->v : e->u;
        std::uint32_t lev = rs.tree.level(x);
        if (best_x == kNoVertex || lev > best_level) {
          if (best_x == kNoVertex) {
            rs.ledger.charge(1);
            ++held;
          }
          best_x = x;
          best_y = y;
          best_level = lev;
        }
      } else if (!in_u) {
        for (VertexId a : {e->u, e->v}) {
          if (next[a] == kNoVertex) {
            rs.ledger.charge(1);
            ++held;
          }
          linked[a] = 1;
        }
        next[e->u] = e->v;
        next[e->v] = e->u;
      }
    }

    auto extend = [&](VertexId y, VertexId x) {
      rs.tree.attach(y, x);
      for (VertexId cur = y; next[cur] != kNoVertex && !rs.tree.contains(next[cur]); cur = next[cur])
        rs.tree.attach(next[cur], cur);
    };
    if (best_x != kNoVertex) {
      extend(best_y, best_x);
    } else {
      VertexId start = kNoVertex;
      for (VertexId v = 0; v < n; ++v) {
        if (rs.tree.contains(v)) continue;
        if (linked[v]) {
          if (start == kNoVertex) start = v;
        } else {
          rs.tree.attach(v, rs.root);
        }
      }
      if (start != kNoVertex) extend(start, rs.root);
    }
    rs.ledger.release(held);
  }
}

/// Imprv: every pass adds one vertex to each component of the unvisited
/// graph, namely the endpoint of its edge to the deepest tree vertex. A
/// component with no such edge hangs from r through its vertex that appears
/// first in the stream.
inline void run_imprv_on(RunState& rs) {
  const std::size_t n = rs.n;
  constexpr std::uint64_t kNever = std::numeric_limits<std::uint64_t>::max();
  struct Lowest {
    VertexId x = kNoVertex;
    VertexId y = kNoVertex;
    std::uint32_t level = 0;
    std::uint64_t pos = 0;

    bool beats(const Lowest& o) const { return level != o.level ? level > o.level : pos < o.pos; }
  };
  UnionFind uf(n);
  std::vector<Lowest> best(n);
  std::vector<std::uint64_t> first_seen(n, kNever);
  while (rs.unvisited() > 0) {
    rs.begin_pass();
    for (VertexId v = 0; v < n; ++v) {
      if (rs.tree.contains(v)) continue;
      uf.make_set(v);
      best[v] = {};
      first_seen[v] = kNever;
    }
    std::uint64_t held = 0;
    std::uint64_t pos = 0;
    while (auto e = rs.stream.next_edge()) {
      ++pos;
      bool in_u = rs.tree.contains(e->u), in_v = rs.tree.contains(e->v);
      if (in_u && in_v) continue;
      if (!in_u && !in_v) {
        for (VertexId a : {e->u, e->v})
          if (first_seen[a] == kNever) first_seen[a] = pos;
        VertexId ra = uf.find(e->u), rb = uf.find(e->v);
        if (ra == rb) continue;
        Lowest la = best[ra], lb = best[rb];
        uf.unite(ra, rb);
        Lowest& dst = best[uf.find(ra)];
        if (la.x != kNoVertex && lb.x != kNoVertex) {
          dst = la.beats(lb) ? la : lb;
          rs.ledger.release(1);
          --held;
        } else {
          dst = la.x != kNoVertex ? la : lb;
        }
        continue;
      }
      VertexId x = in_u ? e->u : e->v;
      VertexId y = in_u ? e->v : e->u;
      Lowest& cur = best[uf.find(y)];
      std::uint32_t lev = rs.tree.level(x);
      Lowest cand{x, y, lev, pos};
      if (cur.x == kNoVertex) {
        rs.ledger.charge(1);
        ++held;
        cur = cand;
      } else if (cand.beats(cur)) {
        cur = cand;
      }
    }

    // Pick one vertex per class; classes are visited by smallest member.
    std::vector<VertexId> pick(n, kNoVertex);
    std::vector<VertexId> parent_of(n, kNoVertex);
    std::vector<VertexId> roots;
    for (VertexId v = 0; v < n; ++v) {
      if (rs.tree.contains(v)) continue;
      VertexId r = uf.find(v);
      if (pick[r] == kNoVertex) {
        roots.push_back(r);
        if (best[r].x != kNoVertex) {
          pick[r] = best[r].y;
          parent_of[r] = best[r].x;
        } else {
          pick[r] = v;
          parent_of[r] = rs.root;
        }
      } else if (best[r].x == kNoVertex && first_seen[v] < first_seen[pick[r]]) {
        pick[r] = v;
      }
    }
    for (VertexId r : roots) rs.tree.attach(pick[r], parent_of[r]);
    rs.ledger.release(held);
  }
}

}  // namespace sdfs
