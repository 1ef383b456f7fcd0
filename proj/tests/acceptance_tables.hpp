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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

// Pass counts of the O and N variants on thirteen real datasets for
// k = 1..10, with the reduction percentage and column average as printed.
namespace sdfs::acceptance {

struct TableRow {
  std::string dataset;
  std::array<std::uint64_t, 10> passes_o;
  std::array<std::uint64_t, 10> passes_n;
  std::array<std::int64_t, 10> reduction;
};

inline const std::vector<TableRow> kPathTable = {
    {"CU", {5, 4, 3, 2, 2, 2, 2, 2, 2, 2}, {3, 2, 2, 1, 1, 1, 1, 1, 1, 1}, {40, 50, 33, 50, 50, 50, 50, 50, 50, 50}},
    {"AJazz", {19, 16, 10, 7, 5, 5, 4, 3, 3, 3}, {5, 4, 3, 3, 2, 2, 2, 2, 2, 2}, {73, 75, 70, 57, 60, 60, 50, 33, 33, 33}},
    {"HM", {47, 13, 8, 5, 5, 4, 4, 4, 3, 2}, {4, 3, 3, 2, 2, 2, 2, 1, 1, 1}, {91, 76, 62, 60, 60, 50, 50, 75, 66, 50}},
    {"ArxAP", {231, 33, 17, 12, 10, 6, 7, 3, 3, 3}, {5, 4, 3, 3, 2, 2, 2, 2, 2, 2}, {97, 87, 82, 75, 80, 66, 71, 33, 33, 33}},
    {"AsCaida", {43, 8, 3, 2, 2, 2, 2, 2, 2, 2}, {3, 2, 2, 1, 1, 1, 1, 1, 1, 1}, {93, 75, 33, 50, 50, 50, 50, 50, 50, 50}},
    {"BrightK", {242, 14, 6, 4, 2, 2, 2, 2, 2, 2}, {3, 2, 2, 2, 1, 1, 1, 1, 1, 1}, {98, 85, 66, 50, 50, 50, 50, 50, 50, 50}},
    {"LMocha", {850, 22, 9, 7, 6, 5, 4, 4, 4, 3}, {6, 4, 3, 3, 3, 3, 2, 2, 2, 2}, {99, 81, 66, 57, 50, 40, 50, 50, 50, 33}},
    {"FlickrE", {737, 43, 18, 10, 7, 6, 5, 5, 4, 4}, {5, 4, 4, 4, 3, 3, 3, 2, 2, 2}, {99, 90, 77, 60, 57, 50, 40, 60, 50, 50}},
    {"WordNet", {303, 66, 19, 5, 4, 2, 2, 2, 2, 2}, {4, 3, 3, 2, 2, 1, 1, 1, 1, 1}, {98, 95, 84, 60, 50, 50, 50, 50, 50, 50}},
    {"Douban", {284, 7, 3, 2, 2, 2, 2, 2, 2, 2}, {3, 2, 2, 1, 1, 1, 1, 1, 1, 1}, {98, 71, 33, 50, 50, 50, 50, 50, 50, 50}},
    {"Gowalla", {617, 32, 6, 4, 6, 2, 2, 2, 2, 2}, {4, 2, 2, 2, 2, 1, 1, 1, 1, 1}, {99, 93, 66, 50, 66, 50, 50, 50, 50, 50}},
    {"Dblp", {471, 43, 13, 9, 2, 2, 2, 2, 2, 2}, {4, 3, 3, 3, 1, 1, 1, 1, 1, 1}, {99, 93, 76, 66, 50, 50, 50, 50, 50, 50}},
    {"Amazon", {309, 107, 8, 2, 2, 2, 2, 2, 2, 2}, {4, 3, 2, 1, 1, 1, 1, 1, 1, 1}, {98, 97, 75, 50, 50, 50, 50, 50, 50, 50}},
};
inline const std::array<std::int64_t, 10> kPathAverage = {90, 82, 63, 56, 55, 51, 50, 50, 48, 46};
inline const std::vector<TableRow> kLevTable = {
    {"CU", {3, 3, 3, 3, 3, 3, 3, 3, 3, 3}, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {66, 66, 66, 66, 66, 66, 66, 66, 66, 66}},
    {"AJazz", {3, 3, 3, 3, 3, 3, 3, 3, 3, 3}, {2, 2, 2, 2, 2, 2, 2, 2, 2, 2}, {33, 33, 33, 33, 33, 33, 33, 33, 33, 33}},
    {"HM", {4, 4, 4, 4, 4, 4, 4, 4, 4, 4}, {3, 3, 2, 2, 2, 2, 1, 1, 1, 1}, {25, 25, 50, 50, 50, 50, 75, 75, 75, 75}},
    {"ArxAP", {5, 5, 5, 5, 5, 5, 5, 5, 5, 5}, {4, 4, 3, 3, 2, 2, 2, 2, 2, 2}, {20, 20, 40, 40, 60, 60, 60, 60, 60, 60}},
    {"AsCaida", {4, 4, 4, 4, 4, 4, 4, 4, 4, 4}, {2, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {50, 75, 75, 75, 75, 75, 75, 75, 75, 75}},
    {"BrightK", {5, 5, 5, 5, 5, 5, 5, 5, 5, 5}, {3, 2, 1, 1, 1, 1, 1, 1, 1, 1}, {40, 60, 80, 80, 80, 80, 80, 80, 80, 80}},
    {"LMocha", {4, 4, 4, 4, 4, 4, 4, 4, 4, 4}, {3, 3, 3, 3, 3, 3, 2, 2, 2, 2}, {25, 25, 25, 25, 25, 25, 50, 50, 50, 50}},
    {"FlickrE", {5, 5, 5, 5, 5, 5, 5, 5, 5, 5}, {4, 4, 4, 3, 3, 3, 3, 3, 3, 3}, {20, 20, 20, 40, 40, 40, 40, 40, 40, 40}},
    {"WordNet", {6, 6, 6, 6, 6, 6, 6, 6, 6, 6}, {4, 3, 2, 2, 2, 1, 1, 1, 1, 1}, {33, 50, 66, 66, 66, 83, 83, 83, 83, 83}},
    {"Douban", {4, 4, 4, 4, 4, 4, 4, 4, 4, 4}, {2, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {50, 75, 75, 75, 75, 75, 75, 75, 75, 75}},
    {"Gowalla", {6, 6, 6, 6, 6, 6, 6, 6, 6, 6}, {4, 2, 2, 2, 1, 1, 1, 1, 1, 1}, {33, 66, 66, 66, 83, 83, 83, 83, 83, 83}},
    {"Dblp", {6, 6, 6, 6, 6, 6, 6, 6, 6, 6}, {3, 2, 2, 1, 1, 1, 1, 1, 1, 1}, {50, 66, 66, 83, 83, 83, 83, 83, 83, 83}},
    {"Amazon", {6, 6, 6, 6, 6, 6, 6, 6, 6, 6}, {3, 2, 2, 1, 1, 1, 1, 1, 1, 1}, {50, 66, 66, 83, 83, 83, 83, 83, 83, 83}},
};
inline const std::array<std::int64_t, 10> kLevAverage = {38, 49, 56, 60, 63, 64, 68, 68, 68, 68};
}  // namespace sdfs::acceptance
