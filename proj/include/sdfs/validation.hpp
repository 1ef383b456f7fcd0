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
#include <optional>
#include <utility>
#include <vector>

#include "sdfs/graph.hpp"

namespace sdfs {

struct ValidityReport {
  bool is_spanning = false;
  bool is_dfs = false;
  std::optional<Edge> offending_edge;

  bool ok() const { return is_spanning && is_dfs; }
};

/// Checks `tree` against `graph` plus the artificial root r = n adjacent to
/// every vertex. Tree edges must be graph edges or r-edges; every other graph
/// edge must join an ancestor and a descendant.
inline ValidityReport check_dfs(const AdjacencyGraph& graph, const DfsTree& tree) {
  ValidityReport rep;
  const std::size_t n = graph.n();
  const VertexId r = artificial_root(n);
  rep.is_spanning = tree.capacity() >= n + 1 && tree.root() == r && tree.size() == n + 1;
  if (rep.is_spanning) {
    for (VertexId v = 0; v < n && rep.is_spanning; ++v) {
      if (!tree.contains(v)) {
        rep.is_spanning = false;
        break;
      }
      VertexId p = tree.parent(v);
      if (p == r) continue;
      auto nb = graph.neighbors(v);
      if (std::find(nb.begin(), nb.end(), p) == nb.end()) rep.is_spanning = false;
    }
  }
  if (!rep.is_spanning) return rep;
  // Entry/exit times make each ancestor test O(1).
  std::vector<std::uint32_t> tin(n + 1), tout(n + 1);
  std::uint32_t clock = 0;
  std::vector<std::pair<VertexId, std::size_t>> stack{{r, 0}};
  tin[r] = clock++;
  while (!stack.empty()) {
    auto [u, i] = stack.back();
    auto kids = tree.children(u);
    if (i == kids.size()) {
      tout[u] = clock++;
      stack.pop_back();
      continue;
    }
    ++stack.back().second;
    tin[kids[i]] = clock++;
    stack.push_back({kids[i], 0});
  }
  auto ancestor = [&](VertexId a, VertexId d) { return tin[a] <= tin[d] && tout[d] <= tout[a]; };
  rep.is_dfs = true;
  for (const Edge& e : graph.edges()) {
    if (!ancestor(e.u, e.v) && !ancestor(e.v, e.u)) {
      rep.is_dfs = false;
      rep.offending_edge = e;
      break;
    }
  }
  return rep;
}

/// Independent check through explicit ancestor sets; quadratic, for tiny
/// graphs only.
inline bool brute_force_is_dfs(const AdjacencyGraph& graph, const DfsTree& tree) {
  const std::size_t n = graph.n();
  const VertexId r = artificial_root(n);
  if (tree.size() != n + 1 || tree.root() != r) return false;
  std::vector<std::vector<bool>> anc(n + 1, std::vector<bool>(n + 1, false));
  for (VertexId v = 0; v <= n; ++v) {
    if (!tree.contains(v)) return false;
    std::size_t steps = 0;
    for (VertexId a = v; a != kNoVertex; a = a == r ? kNoVertex : tree.parent(a)) {
      anc[v][a] = true;
      if (++steps > n + 1) return false;
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    VertexId p = tree.parent(v);
    if (p == r) continue;
    bool adjacent = false;
    for (VertexId w : graph.neighbors(v)) adjacent |= (w == p);
    if (!adjacent) return false;
  }
  for (const Edge& e : graph.edges())
    if (!anc[e.u][e.v] && !anc[e.v][e.u]) return false;
  return true;
}

/// Stack-based DFS from r; r's neighbours are 0..n-1 in order and every
/// other vertex follows its adjacency order.
inline DfsTree oracle_dfs(const AdjacencyGraph& graph) {
  const std::size_t n = graph.n();
  const VertexId r = artificial_root(n);
  DfsTree tree(n + 1, r);
  std::vector<std::pair<VertexId, std::size_t>> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (tree.contains(s)) continue;
    tree.attach(s, r);
    stack.push_back({s, 0});
    while (!stack.empty()) {
      auto [u, i] = stack.back();
      auto nb = graph.neighbors(u);
      if (i == nb.size()) {
        stack.pop_back();
        continue;
      }
      ++stack.back().second;
      VertexId w = nb[i];
      if (tree.contains(w)) continue;
      tree.attach(w, u);
      stack.push_back({w, 0});
    }
  }
  return tree;
}

}  // namespace sdfs
