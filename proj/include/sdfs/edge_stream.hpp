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

#include <charconv>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "sdfs/graph.hpp"

namespace sdfs {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

enum class LineKind { kSkip, kEdge };

/// Parses one edge-list line. Tokens are split on ASCII whitespace, lines
/// starting with '%' or '#' are comments, columns after the second are
/// ignored. Ids are 1-based on disk and returned 0-based.
inline LineKind parse_edge_line(std::string_view line, Edge& out, std::string& error) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f'; };
  std::size_t pos = 0;
  while (pos < line.size() && is_space(line[pos])) ++pos;
  if (pos == line.size()) return LineKind::kSkip;
  if (line[pos] == '%' || line[pos] == '#') return LineKind::kSkip;

  std::uint64_t ids[2];
  for (int i = 0; i < 2; ++i) {
    while (pos < line.size() && is_space(line[pos])) ++pos;
    std::size_t end = pos;
    while (end < line.size() && !is_space(line[end])) ++end;
    if (end == pos) {
      error = "expected two vertex ids";
      return LineKind::kSkip;
    }
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, ids[i]);
    if (ec != std::errc() || ptr != line.data() + end) {
      error = "malformed vertex id '" + std::string(line.substr(pos, end - pos)) + "'";
      return LineKind::kSkip;
    }
    if (ids[i] == 0) {
      error = "vertex id 0 in a 1-based edge list";
      return LineKind::kSkip;
    }
    if (ids[i] > std::numeric_limits<VertexId>::max() - 1) {
      error = "vertex id too large";
      return LineKind::kSkip;
    }
    pos = end;
  }
  out = Edge{static_cast<VertexId>(ids[0] - 1), static_cast<VertexId>(ids[1] - 1)};
  return LineKind::kEdge;
}

struct MemorySource {
  std::shared_ptr<const std::vector<Edge>> edges;
  std::size_t cursor = 0;

  std::optional<Edge> next() {
    if (cursor >= edges->size()) return std::nullopt;
    return (*edges)[cursor++];
  }
  void rewind() { cursor = 0; }
};

struct FileSource {
  std::filesystem::path path;
  std::size_t n = 0;
  std::ifstream in;
  std::size_t line_no = 0;
  std::string line;

  std::optional<Edge> next() {
    std::string error;
    while (std::getline(in, line)) {
      ++line_no;
      Edge e;
      error.clear();
      auto kind = parse_edge_line(line, e, error);
      if (!error.empty()) throw ParseError(path.string(), line_no, error);
      if (kind == LineKind::kSkip) continue;
      if (e.u >= n || e.v >= n)
        throw ParseError(path.string(), line_no, "vertex id exceeds declared vertex count " + std::to_string(n));
      if (e.u == e.v) continue;
      return e;
    }
    return std::nullopt;
  }
  void rewind() {
    in.clear();
    in.seekg(0);
    line_no = 0;
  }
};

}  // namespace detail

/// Reads a whole edge-list file. Returns the vertex count (largest id seen)
/// and the edges in file order with self-loops dropped.
inline std::pair<std::size_t, std::vector<Edge>> read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list: " + path.string());
  std::vector<Edge> edges;
  std::size_t n = 0;
  std::string line, error;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    Edge e;
    error.clear();
    auto kind = detail::parse_edge_line(line, e, error);
    if (!error.empty()) throw ParseError(path.string(), line_no, error);
    if (kind == detail::LineKind::kSkip) continue;
    n = std::max<std::size_t>(n, std::max(e.u, e.v) + std::size_t{1});
    if (e.u != e.v) edges.push_back(e);
  }
  return {n, std::move(edges)};
}

/// Writes edges in the 1-based edge-list format with a KONECT-style header.
inline void write_edge_list(std::ostream& out, std::size_t n, std::span<const Edge> edges) {
  out << "% sym unweighted\n% " << edges.size() << ' ' << n << ' ' << n << '\n';
  for (const Edge& e : edges) out << (e.u + 1) << ' ' << (e.v + 1) << '\n';
}

/// Rewindable, fixed-order edge source. Counts a pass each time reading
/// starts from the beginning, so a pass abandoned halfway still counts.
class EdgeStream {
 public:
  static EdgeStream from_edges(std::size_t n, std::vector<Edge> edges) {
    std::erase_if(edges, [](const Edge& e) { return e.u == e.v; });
    for (const Edge& e : edges)
      if (e.u >= n || e.v >= n) throw std::out_of_range("edge endpoint out of range: " + to_string(e));
    return EdgeStream(n, detail::MemorySource{std::make_shared<const std::vector<Edge>>(std::move(edges))});
  }

  /// Streams `path` from disk on every pass. When `n` is not given it is
  /// taken from a metadata scan of the file, which is not counted as a pass.
  static EdgeStream from_file(const std::filesystem::path& path, std::optional<std::size_t> n = std::nullopt) {
    std::size_t count = n ? *n : read_edge_list(path).first;
    detail::FileSource src;
    src.path = path;
    src.n = count;
    src.in.open(path);
    if (!src.in) throw std::runtime_error("cannot open edge list: " + path.string());
    return EdgeStream(count, std::move(src));
  }

  std::size_t n() const { return n_; }

  /// Next edge of the current pass, or nullopt at end of pass. Exhaustion is
  /// sticky until rewind().
  std::optional<Edge> next_edge() {
    if (at_start_) {
      ++passes_;
      at_start_ = false;
    }
    if (exhausted_) return std::nullopt;
    auto e = std::visit([](auto& s) { return s.next(); }, source_);
    if (!e) exhausted_ = true;
    else ++position_;
    return e;
  }

  void rewind() {
    std::visit([](auto& s) { s.rewind(); }, source_);
    at_start_ = true;
    exhausted_ = false;
    position_ = 0;
  }

  std::size_t passes_used() const { return passes_; }

  /// Number of edges consumed in the current pass.
  std::size_t position() const { return position_; }

 private:
  EdgeStream(std::size_t n, std::variant<detail::MemorySource, detail::FileSource> src)
      : n_(n), source_(std::move(src)) {}

  std::size_t n_;
  std::variant<detail::MemorySource, detail::FileSource> source_;
  std::size_t passes_ = 0;
  std::size_t position_ = 0;
  bool at_start_ = true;
  bool exhausted_ = false;
};

}  // namespace sdfs
