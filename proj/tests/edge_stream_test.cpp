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

#include <filesystem>
#include <fstream>

#include "sdfs/algorithms.hpp"
#include "sdfs/edge_stream.hpp"

namespace sdfs {
namespace {

std::size_t drain(EdgeStream& s) {
  std::size_t count = 0;
  while (s.next_edge()) ++count;
  return count;
}

TEST(EdgeStream, ReadsInOrder) {
  EdgeStream s = EdgeStream::from_edges(3, {{0, 1}, {1, 2}});
  auto e = s.next_edge();
  ASSERT_TRUE(e);
  EXPECT_EQ(*e, (Edge{0, 1}));
  EXPECT_EQ(*s.next_edge(), (Edge{1, 2}));
  EXPECT_FALSE(s.next_edge());
  EXPECT_FALSE(s.next_edge());
  EXPECT_EQ(s.passes_used(), 1u);
}

TEST(EdgeStream, PassCounting) {
  EdgeStream s = EdgeStream::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(s.passes_used(), 0u);
  drain(s);
  EXPECT_EQ(s.passes_used(), 1u);
  s.rewind();
  EXPECT_EQ(s.passes_used(), 1u);
  EXPECT_EQ(drain(s), 3u);
  EXPECT_EQ(s.passes_used(), 2u);
  s.rewind();
  s.next_edge();
  EXPECT_EQ(s.passes_used(), 3u);
  EXPECT_EQ(s.position(), 1u);
}

TEST(EdgeStream, DropsSelfLoopsAndChecksRange) {
  EdgeStream s = EdgeStream::from_edges(3, {{0, 0}, {0, 2}});
  EXPECT_EQ(drain(s), 1u);
  EXPECT_THROW(EdgeStream::from_edges(2, {{0, 2}}), std::out_of_range);
}

TEST(EdgeStream, ParsesCommentedFile) {
  auto [n, edges] = read_edge_list(SDFS_TEST_DATA "/cycle4.txt");
  EXPECT_EQ(n, 4u);
  std::vector<Edge> expected{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  EXPECT_EQ(edges, expected);

  EdgeStream s = EdgeStream::from_file(SDFS_TEST_DATA "/cycle4.txt");
  EXPECT_EQ(s.n(), 4u);
  EXPECT_EQ(s.passes_used(), 0u);
  auto first = s.next_edge();
  ASSERT_TRUE(first);
  EXPECT_EQ(*first, (Edge{0, 1}));
  EXPECT_EQ(drain(s), 3u);
  s.rewind();
  EXPECT_EQ(drain(s), 4u);
  EXPECT_EQ(s.passes_used(), 2u);
}

class TempFile {
 public:
  explicit TempFile(const std::string& body) {
    path_ = std::filesystem::temp_directory_path() /
            ("sdfs_stream_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + ".txt");
    std::ofstream(path_) << body;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

TEST(EdgeStream, MalformedLineReportsLineNumber) {
  TempFile f("1 2\n% ok\n3 x\n");
  try {
    read_edge_list(f.path());
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  TempFile zero("0 1\n");
  EXPECT_THROW(read_edge_list(zero.path()), ParseError);
  TempFile lone("5\n");
  EXPECT_THROW(read_edge_list(lone.path()), ParseError);
}

TEST(EdgeStream, FileStreamRejectsIdsBeyondDeclaredN) {
  TempFile f("1 2\n1 9\n");
  EdgeStream s = EdgeStream::from_file(f.path(), 3);
  EXPECT_TRUE(s.next_edge());
  EXPECT_THROW(s.next_edge(), ParseError);
}

TEST(EdgeStream, WriteThenReadRoundTrip) {
  std::vector<Edge> edges{{0, 4}, {2, 3}, {1, 4}};
  std::ostringstream out;
  write_edge_list(out, 5, edges);
  TempFile f(out.str());
  auto [n, back] = read_edge_list(f.path());
  EXPECT_EQ(n, 5u);
  EXPECT_EQ(back, edges);
}

// K4 streamed so that kPathN with k=2 overflows on the fifth edge: the local
// DFS of the star plus the first four edges is the path 0-1-2-3 rooted below
// r, which covers every vertex, so the run ends before the last edge is read.
TEST(EdgeStream, PartialPassCountsAsOne) {
  EdgeStream s = EdgeStream::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}, {0, 3}});
  RunResult r = run(AlgoConfig{Family::kPath, Variant::kN, 2}, s);
  EXPECT_EQ(r.report.passes, 1u);
  EXPECT_EQ(s.passes_used(), 1u);
  EXPECT_LT(s.position(), 6u);
}

}  // namespace
}  // namespace sdfs
