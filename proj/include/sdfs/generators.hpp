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
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "sdfs/graph.hpp"

namespace sdfs {

inline std::uint64_t max_simple_edges(std::size_t n) {
  return n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

namespace detail {

/// The idx-th unordered pair (a, b), a < b, in order of increasing b.
inline Edge pair_from_index(std::uint64_t idx) {
  auto b = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(idx))) / 2.0);
  while (b * (b - 1) / 2 > idx) --b;
  while ((b + 1) * b / 2 <= idx) ++b;
  return Edge{static_cast<VertexId>(idx - b * (b - 1) / 2), static_cast<VertexId>(b)};
}

}  // namespace detail

/// Uniform G(n, m): m distinct pairs drawn by Floyd's sampling, then shuffled.
/// The returned order is the stream order.
inline std::vector<Edge> gen_gnm(std::size_t n, std::uint64_t m, std::uint64_t seed) {
  const std::uint64_t total = max_simple_edges(n);
  if (m > total)
    throw std::invalid_argument("m = " + std::to_string(m) + " exceeds n(n-1)/2 = " + std::to_string(total));
  std::mt19937_64 rng(seed);
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(m * 2);
  std::vector<std::uint64_t> picks;
  picks.reserve(m);
  for (std::uint64_t j = total - m; j < total; ++j) {
    std::uint64_t t = std::uniform_int_distribution<std::uint64_t>(0, j)(rng);
    std::uint64_t pick = chosen.insert(t).second ? t : j;
    if (pick == j) chosen.insert(j);
    picks.push_back(pick);
  }
  std::shuffle(picks.begin(), picks.end(), rng);
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t idx : picks) edges.push_back(detail::pair_from_index(idx));
  return edges;
}

/// Preferential-attachment graph with exactly m simple edges. Vertices
/// arrive in id order and link to earlier vertices chosen with probability
/// proportional to degree + A, with A = (exponent - 2) * m / n, so the degree
/// CCDF falls as d^-exponent. Edges that do not fit the arrival schedule are
/// added between preferentially chosen pairs at the end.
inline std::vector<Edge> gen_powerlaw(std::size_t n, std::uint64_t m, double exponent, std::uint64_t seed) {
  if (m > max_simple_edges(n))
    throw std::invalid_argument("m = " + std::to_string(m) + " exceeds n(n-1)/2");
  if (!(exponent >= 2.0)) throw std::invalid_argument("power-law exponent must be at least 2");
  std::mt19937_64 rng(seed);
  const double attract = n == 0 ? 0.0 : (exponent - 2.0) * static_cast<double>(m) / static_cast<double>(n);

  std::vector<Edge> edges;
  edges.reserve(m);
  std::vector<VertexId> endpoints;  // each edge contributes both ends
  endpoints.reserve(2 * m);
  std::unordered_set<std::uint64_t> present;
  present.reserve(m * 2);

  // Picks among [0, limit) with weight degree + attract (uniform if all zero).
  auto pick = [&](std::size_t limit) -> VertexId {
    double deg_mass = static_cast<double>(endpoints.size());
    double extra = attract * static_cast<double>(limit);
    if (deg_mass + extra <= 0.0) return static_cast<VertexId>(std::uniform_int_distribution<std::size_t>(0, limit - 1)(rng));
    double x = std::uniform_real_distribution<double>(0.0, deg_mass + extra)(rng);
    if (x < deg_mass) {
      VertexId v = endpoints[std::min(endpoints.size() - 1, static_cast<std::size_t>(x))];
      if (v < limit) return v;
    }
    return static_cast<VertexId>(std::uniform_int_distribution<std::size_t>(0, limit - 1)(rng));
  };
  auto add = [&](VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    present.insert(pair_key(a, b));
    edges.push_back(Edge{a, b});
    endpoints.push_back(a);
    endpoints.push_back(b);
  };

  std::uint64_t leftover = 0;
  for (std::size_t v = 1; v < n; ++v) {
    std::uint64_t want = m * v / (n - 1) - m * (v - 1) / (n - 1);
    std::uint64_t deg = std::min<std::uint64_t>(want, v);
    leftover += want - deg;
    std::vector<VertexId> targets;
    while (targets.size() < deg) {
      VertexId t = pick(v);
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (VertexId t : targets) add(t, static_cast<VertexId>(v));
  }
  while (leftover > 0) {
    VertexId a = pick(n), b = pick(n);
    if (a == b || present.count(pair_key(a, b))) continue;
    add(a, b);
    --leftover;
  }
  return edges;
}

}  // namespace sdfs
