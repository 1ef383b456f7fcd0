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

#include <cctype>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sdfs/budget.hpp"
#include "sdfs/components.hpp"
#include "sdfs/edge_stream.hpp"
#include "sdfs/graph.hpp"

namespace sdfs {

enum class Family { kSimp, kImprv, kPath, kLev };

/// O = no heuristics, 1 = artificial-root start (H1), 2 = H1 + H2,
/// N = H1 + H2 + H3.
enum class Variant { kO, k1, k2, kN };

struct AlgoConfig {
  Family family = Family::kPath;
  Variant variant = Variant::kN;
  std::uint32_t k = 1;
  bool trace_budget = false;

  bool artificial_start() const { return variant != Variant::kO; }
  bool budget_level_1() const { return variant == Variant::k2 || variant == Variant::kN; }
  bool budget_level_2() const { return variant == Variant::kN; }
  bool marked_vertices() const { return family == Family::kLev && budget_level_1(); }

  std::string name() const {
    switch (family) {
      case Family::kSimp: return "simp";
      case Family::kImprv: return "imprv";
      default: break;
    }
    std::string base = family == Family::kPath ? "kpath" : "klev";
    const char* suffix[] = {"O", "1", "2", "N"};
    return base + suffix[static_cast<int>(variant)];
  }

  /// Parses names such as "kpathN", "klev2", "simp" (case-insensitive prefix).
  static std::optional<AlgoConfig> parse(std::string_view name, std::uint32_t k) {
    auto lower = [](std::string_view s) {
      std::string out(s);
      for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      return out;
    };
    std::string s = lower(name);
    AlgoConfig c;
    c.k = k;
    if (s == "simp") {
      c.family = Family::kSimp;
      return c;
    }
    if (s == "imprv") {
      c.family = Family::kImprv;
      return c;
    }
    std::string_view rest;
    if (s.rfind("kpath", 0) == 0) {
      c.family = Family::kPath;
      rest = std::string_view(s).substr(5);
    } else if (s.rfind("klev", 0) == 0) {
      c.family = Family::kLev;
      rest = std::string_view(s).substr(4);
    } else {
      return std::nullopt;
    }
    if (rest == "o") c.variant = Variant::kO;
    else if (rest == "1") c.variant = Variant::k1;
    else if (rest == "2") c.variant = Variant::k2;
    else if (rest == "n") c.variant = Variant::kN;
    else return std::nullopt;
    return c;
  }

  static std::vector<std::string> all_names() {
    return {"simp", "imprv", "kpathO", "kpath1", "kpath2", "kpathN", "klevO", "klev1", "klev2", "klevN"};
  }
};

struct RunReport {
  std::string algo;
  std::uint32_t k = 0;
  std::size_t n = 0;
  std::size_t passes = 0;
  std::uint64_t peak_stored_edges = 0;
  std::uint64_t budget = 0;
  std::uint32_t height = 0;
};

struct RunResult {
  DfsTree tree;
  RunReport report;
  BudgetLedger ledger{0};
};

/// Edge capacity of a run: n·k for the k-families. The baselines keep one
/// candidate edge per unvisited vertex plus a handful of extras and get 2n.
inline std::uint64_t budget_capacity(const AlgoConfig& config, std::size_t n) {
  if (config.family == Family::kSimp || config.family == Family::kImprv) return 2 * static_cast<std::uint64_t>(n);
  return static_cast<std::uint64_t>(n) * config.k;
}

/// State shared by every algorithm for the duration of one run.
///
/// Charging rule: every vertex not yet in the output tree owns exactly one
/// charged edge (its edge to the parent it would hang from), so the output
/// tree itself is free and buffers are charged on top.
struct RunState {
  RunState(const AlgoConfig& c, EdgeStream& s)
      : config(c),
        stream(s),
        n(s.n()),
        root(artificial_root(s.n())),
        ledger(budget_capacity(c, s.n()), c.trace_budget),
        tree(s.n() + 1, artificial_root(s.n())),
        registry(s.n() + 1) {
    if (c.k == 0) throw std::invalid_argument("k must be positive");
  }

  const AlgoConfig& config;
  EdgeStream& stream;
  std::size_t n;
  VertexId root;
  BudgetLedger ledger;
  DfsTree tree;
  ComponentRegistry registry;

  /// Number of vertices still outside the output tree.
  std::size_t unvisited() const { return n + 1 - tree.size(); }

  /// Reads the next pass from its start.
  void begin_pass() { stream.rewind(); }

  /// Appends a singleton component's vertex and drops its charge.
  void finalize_singleton(VertexId v, VertexId attach) {
    tree.attach(v, attach);
    registry.mark_visited(v);
    ledger.release(1);
  }

  RunResult finish() {
    RunResult out;
    out.report.algo = config.name();
    out.report.k = config.k;
    out.report.n = n;
    out.report.passes = stream.passes_used();
    out.report.peak_stored_edges = ledger.peak_usage();
    out.report.budget = ledger.capacity();
    out.report.height = tree.height();
    out.tree = std::move(tree);
    out.ledger = std::move(ledger);
    return out;
  }
};

/// Components at the start of the first algorithm pass.
///
/// With the artificial-root start the whole graph is one component: r plus
/// every vertex, spanned by the star at r, and no pass is spent. Otherwise a
/// union-find pass builds a spanning forest; each tree is rooted at its
/// smallest vertex and hangs from r. Singleton classes go straight into the
/// output tree.
inline std::vector<Component> initial_components(RunState& rs) {
  std::vector<Component> comps;
  if (rs.n == 0) return comps;
  if (rs.config.artificial_start()) {
    Component c;
    c.root = rs.root;
    c.attach_parent = kNoVertex;
    c.vertices.reserve(rs.n);
    c.order.reserve(rs.n + 1);
    c.parents.reserve(rs.n + 1);
    c.order.push_back(rs.root);
    c.parents.push_back(kNoVertex);
    for (VertexId v = 0; v < rs.n; ++v) {
      c.vertices.push_back(v);
      c.order.push_back(v);
      c.parents.push_back(rs.root);
      rs.registry.assign(v, 0);
    }
    rs.ledger.charge(rs.n);
    comps.push_back(std::move(c));
    return comps;
  }

  UnionFind uf(rs.n);
  std::vector<Edge> forest;
  rs.begin_pass();
  while (auto e = rs.stream.next_edge()) {
    if (uf.unite(e->u, e->v)) {
      forest.push_back(*e);
      rs.ledger.charge(1);
    }
  }
  std::vector<std::uint32_t> slot(rs.n, ComponentRegistry::kNone);
  std::vector<std::vector<Edge>> class_edges;
  for (VertexId v = 0; v < rs.n; ++v) {
    VertexId r = uf.find(v);
    if (slot[r] == ComponentRegistry::kNone) {
      slot[r] = static_cast<std::uint32_t>(comps.size());
      Component c;
      c.root = v;  // smallest id of its class
      c.attach_parent = rs.root;
      comps.push_back(std::move(c));
      class_edges.emplace_back();
      rs.ledger.charge(1);
    }
    comps[slot[r]].vertices.push_back(v);
  }
  for (const Edge& e : forest) class_edges[slot[uf.find(e.u)]].push_back(e);

  std::vector<Component> live;
  std::vector<std::vector<VertexId>> scratch(rs.n + 1);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    Component& c = comps[i];
    if (c.vertices.size() == 1) {
      rs.finalize_singleton(c.root, rs.root);
      continue;
    }
    OrientedTree t = orient_tree(c.root, c.vertices, class_edges[i], scratch);
    c.order = std::move(t.order);
    c.parents = std::move(t.parents);
    for (VertexId v : c.vertices) rs.registry.assign(v, static_cast<std::uint32_t>(live.size()));
    live.push_back(std::move(c));
  }
  return live;
}

}  // namespace sdfs
