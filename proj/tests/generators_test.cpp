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

#include <algorithm>
#include <cmath>
#include <set>

#include "sdfs/generators.hpp"

namespace sdfs {
namespace {

void expect_simple(std::size_t n, const std::vector<Edge>& edges) {
  std::set<std::uint64_t> seen;
  for (const Edge& e : edges) {
    EXPECT_NE(e.u, e.v);
    EXPECT_LT(e.u, n);
    EXPECT_LT(e.v, n);
    EXPECT_TRUE(seen.insert(pair_key(e.u, e.v)).second) << to_string(e);
  }
}

TEST(PairFromIndex, EnumeratesAllPairsOnce) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < max_simple_edges(40); ++i) {
    Edge e = detail::pair_from_index(i);
    ASSERT_LT(e.u, e.v);
    ASSERT_LT(e.v, 40u);
    ASSERT_TRUE(seen.insert(pair_key(e.u, e.v)).second);
  }
}

TEST(Gnm, CompleteGraph) {
  auto edges = gen_gnm(4, 6, 1);
  EXPECT_EQ(edges.size(), 6u);
  expect_simple(4, edges);
}

TEST(Gnm, Empty) { EXPECT_TRUE(gen_gnm(5, 0, 1).empty()); }

TEST(Gnm, SeedsGiveDifferentSimpleGraphs) {
  auto a = gen_gnm(100, 300, 1);
  auto b = gen_gnm(100, 300, 2);
  EXPECT_EQ(a.size(), 300u);
  EXPECT_EQ(b.size(), 300u);
  expect_simple(100, a);
  expect_simple(100, b);
  EXPECT_NE(a, b);
  EXPECT_EQ(a, gen_gnm(100, 300, 1));
}

TEST(Gnm, TooManyEdges) { EXPECT_THROW(gen_gnm(4, 7, 1), std::invalid_argument); }

// Each pair should be picked with probability m / C(n,2).
TEST(Gnm, PairFrequenciesAreUniform) {
  const std::size_t n = 6;
  const std::uint64_t m = 5, trials = 6000;
  std::vector<std::uint64_t> hits(n * n, 0);
  for (std::uint64_t s = 0; s < trials; ++s)
    for (const Edge& e : gen_gnm(n, m, s)) ++hits[std::min(e.u, e.v) * n + std::max(e.u, e.v)];
  double expected = static_cast<double>(trials * m) / static_cast<double>(max_simple_edges(n));
  double chi2 = 0;
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b) {
      double d = static_cast<double>(hits[a * n + b]) - expected;
      chi2 += d * d / expected;
    }
  // 14 degrees of freedom; 36.1 is the 0.001 upper quantile.
  EXPECT_LT(chi2, 36.1);
}

TEST(PowerLaw, TinyCase) {
  auto edges = gen_powerlaw(2, 1, 3.0, 9);
  ASSERT_EQ(edges.size(), 1u);
  EXPECT_EQ(edges[0], (Edge{0, 1}));
}

TEST(PowerLaw, SimpleAndExactSize) {
  auto edges = gen_powerlaw(1000, 31623, 3.0, 4);
  EXPECT_EQ(edges.size(), 31623u);
  expect_simple(1000, edges);
  EXPECT_EQ(edges, gen_powerlaw(1000, 31623, 3.0, 4));
  EXPECT_NE(edges, gen_powerlaw(1000, 31623, 3.0, 5));
}

TEST(PowerLaw, DenseRequestsFit) {
  auto edges = gen_powerlaw(30, max_simple_edges(30), 3.0, 1);
  EXPECT_EQ(edges.size(), max_simple_edges(30));
  expect_simple(30, edges);
}

// Least-squares slope of log CCDF against log degree, over degrees >= 10.
TEST(PowerLaw, TailSlope) {
  const std::size_t n = 10000;
  auto edges = gen_powerlaw(n, 50000, 3.0, 1);
  std::vector<std::uint32_t> deg(n, 0);
  for (const Edge& e : edges) ++deg[e.u], ++deg[e.v];
  std::sort(deg.begin(), deg.end());
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < n; ++i) {
    if (deg[i] < 10 || (i > 0 && deg[i] == deg[i - 1])) continue;
    xs.push_back(std::log(static_cast<double>(deg[i])));
    ys.push_back(std::log(static_cast<double>(n - i) / static_cast<double>(n)));
  }
  ASSERT_GT(xs.size(), 10u);
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) mx += xs[i], my += ys[i];
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(ys.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  double slope = sxy / sxx;
  EXPECT_GE(slope, -3.6);
  EXPECT_LE(slope, -2.4);
}

TEST(PowerLaw, RejectsBadInput) {
  EXPECT_THROW(gen_powerlaw(4, 7, 3.0, 1), std::invalid_argument);
  EXPECT_THROW(gen_powerlaw(10, 5, 1.5, 1), std::invalid_argument);
}

}  // namespace
}  // namespace sdfs
