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
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sdfs {

/// Raised when an algorithm would hold more graph edges than it is allowed
/// to. This always indicates a bug in the algorithm, never bad input.
class BudgetFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Counts graph edges held by a run (tree edges of unfinished components,
/// buffered edges, retained back edges, artificial-root edges) and faults on
/// any attempt to exceed `capacity`.
class BudgetLedger {
 public:
  explicit BudgetLedger(std::uint64_t capacity, bool trace = false) : capacity_(capacity), trace_(trace) {}

  void charge(std::uint64_t count) {
    if (count > capacity_ - current_)
      throw BudgetFault("budget exceeded: " + std::to_string(current_) + " + " + std::to_string(count) + " > " +
                        std::to_string(capacity_));
    current_ += count;
    peak_ = std::max(peak_, current_);
    record();
  }

  void release(std::uint64_t count) {
    if (count > current_)
      throw BudgetFault("double release: " + std::to_string(count) + " > " + std::to_string(current_));
    current_ -= count;
    record();
  }

  std::uint64_t capacity() const { return capacity_; }
  std::uint64_t current() const { return current_; }
  std::uint64_t peak_usage() const { return peak_; }

  /// (event index, current) after every charge/release, when tracing.
  const std::vector<std::pair<std::uint64_t, std::uint64_t>>& trace() const { return events_; }

  void write_trace_csv(std::ostream& out, const std::string& run_label = {}) const {
    for (const auto& [index, value] : events_) {
      if (!run_label.empty()) out << run_label << ',';
      out << index << ',' << value << '\n';
    }
  }

 private:
  void record() {
    if (trace_) events_.emplace_back(event_index_, current_);
    ++event_index_;
  }

  std::uint64_t capacity_;
  std::uint64_t current_ = 0;
  std::uint64_t peak_ = 0;
  std::uint64_t event_index_ = 0;
  bool trace_;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> events_;
};

}  // namespace sdfs
