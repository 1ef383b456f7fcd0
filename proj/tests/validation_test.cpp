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

#include <gtest/gtest.h>

#include <random>

#include "sdfs/generators.hpp"
#include "sdfs/validation.hpp"

namespace sdfs {
namespace {

// Random spanning tree of {0..n} rooted at r = n: parent of v is any
// vertex already placed, visiting vertices in a random order.
DfsTree random_tree(std::size_t n, std::mt19937_64& rng) {
  std::vector<VertexId> order(n);
  for (VertexId v = 0; v < n; ++v) order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);
  DfsTree t(n + 1, static_cast<VertexId>(n));
  std::vector<VertexId> placed{static_cast<VertexId>(n)};
  for (VertexId v : order) {
    t.attach(v, placed[std::uniform_int_distribution<std::size_t>(0, placed.size() - 1)(rng)]);
    placed.push_back(v);
  }
  return t;
}

TEST(CheckDfs, AgreesWithBruteForce) {
  std::mt19937_64 rng(8);
  int valid = 0, invalid = 0;
  for (int iter = 0; iter < 3000; ++iter) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(1, 10)(rng);
    DfsTree t = random_tree(n, rng);
    // Graph: the tree's non-root edges plus random extras.
    std::vector<Edge> edges;
    for (VertexId v = 0; v < n; ++v)
      if (t.parent(v) != n) edges.push_back({t.parent(v), v});
    auto extra = gen_gnm(n, std::uniform_int_distribution<std::uint64_t>(0, max_simple_edges(n) / 3)(rng), rng());
    edges.insert(edges.end(), extra.begin(), extra.end());
    AdjacencyGraph g(n, edges);
    ValidityReport rep = check_dfs(g, t);
    ASSERT_TRUE(rep.is_spanning);
    ASSERT_EQ(rep.is_dfs, brute_force_is_dfs(g, t)) << "iteration " << iter;
    if (rep.is_dfs) {
      ++valid;
      EXPECT_FALSE(rep.offending_edge);
    } else {
      ++invalid;
      ASSERT_TRUE(rep.offending_edge);
      EXPECT_FALSE(is_ancestor(t, rep.offending_edge->u, rep.offending_edge->v) ||
                   is_ancestor(t, rep.offending_edge->v, rep.offending_edge->u));
    }
  }
  EXPECT_GT(valid, 100);
  EXPECT_GT(invalid, 100);
}

TEST(CheckDfs, RejectsNonSpanningTrees) {
  std::vector<Edge> edges{{0, 1}, {1, 2}};
  AdjacencyGraph g(3, edges);
  DfsTree partial(4, 3);
  partial.attach(0, 3);
  partial.attach(1, 0);
  EXPECT_FALSE(check_dfs(g, partial).is_spanning);
  DfsTree wrong_root(4, 0);
  wrong_root.attach(1, 0);
  wrong_root.attach(2, 1);
  wrong_root.attach(3, 0);
  EXPECT_FALSE(check_dfs(g, wrong_root).is_spanning);
  // 2 hangs from 0, which is not a graph edge.
  DfsTree fake(4, 3);
  fake.attach(0, 3);
  fake.attach(2, 0);
  fake.attach(1, 2);
  EXPECT_FALSE(check_dfs(g, fake).is_spanning);
  EXPECT_FALSE(brute_force_is_dfs(g, fake));
}

TEST(CheckDfs, CrossEdgeIsReported) {
  std::vector<Edge> edges{{0, 1}};
  AdjacencyGraph g(2, edges);
  DfsTree t(3, 2);
  t.attach(0, 2);
  t.attach(1, 2);
  ValidityReport rep = check_dfs(g, t);
  EXPECT_TRUE(rep.is_spanning);
  EXPECT_FALSE(rep.is_dfs);
  ASSERT_TRUE(rep.offending_edge);
  EXPECT_EQ(*rep.offending_edge, (Edge{0, 1}));
}

TEST(OracleDfs, ProducesValidTrees) {
  std::mt19937_64 rng(12);
  for (int iter = 0; iter < 500; ++iter) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
    auto edges = gen_gnm(n, std::uniform_int_distribution<std::uint64_t>(0, max_simple_edges(n))(rng), rng());
    AdjacencyGraph g(n, edges);
    DfsTree t = oracle_dfs(g);
    ASSERT_TRUE(check_dfs(g, t).ok());
    ASSERT_TRUE(brute_force_is_dfs(g, t));
  }
}

TEST(OracleDfs, FollowsAdjacencyOrder) {
  std::vector<Edge> edges{{0, 2}, {0, 1}, {1, 2}};
  DfsTree t = oracle_dfs(AdjacencyGraph(4, edges));
  EXPECT_EQ(t.parent(0), 4u);
  EXPECT_EQ(t.parent(2), 0u);
  EXPECT_EQ(t.parent(1), 2u);
  EXPECT_EQ(t.parent(3), 4u);
}

}  // namespace
}  // namespace sdfs
