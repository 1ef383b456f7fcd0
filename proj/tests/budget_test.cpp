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

#include <sstream>

#include "sdfs/budget.hpp"

namespace sdfs {
namespace {

TEST(BudgetLedger, TracksPeak) {
  BudgetLedger b(10);
  b.charge(4);
  b.charge(5);
  b.release(6);
  b.charge(2);
  EXPECT_EQ(b.current(), 5u);
  EXPECT_EQ(b.peak_usage(), 9u);
  EXPECT_EQ(b.capacity(), 10u);
}

TEST(BudgetLedger, FaultsOnOverflowAndDoubleRelease) {
  BudgetLedger b(3);
  b.charge(3);
  EXPECT_THROW(b.charge(1), BudgetFault);
  EXPECT_EQ(b.current(), 3u);
  b.release(3);
  EXPECT_THROW(b.release(1), BudgetFault);
}

TEST(BudgetLedger, TraceRecordsEveryEvent) {
  BudgetLedger b(5, true);
  b.charge(2);
  b.charge(1);
  b.release(3);
  ASSERT_EQ(b.trace().size(), 3u);
  EXPECT_EQ(b.trace()[1].second, 3u);
  std::ostringstream out;
  b.write_trace_csv(out, "run7");
  EXPECT_EQ(out.str(), "run7,0,2\nrun7,1,3\nrun7,2,0\n");

  BudgetLedger quiet(5);
  quiet.charge(1);
  EXPECT_TRUE(quiet.trace().empty());
}

}  // namespace
}  // namespace sdfs
