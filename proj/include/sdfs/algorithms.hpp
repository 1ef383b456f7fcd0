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

#include "sdfs/baselines.hpp"
#include "sdfs/klev.hpp"
#include "sdfs/kpath.hpp"
#include "sdfs/run_state.hpp"

namespace sdfs {

/// Computes a DFS tree of the streamed graph plus the artificial root.
/// The stream is rewound at the start of every pass.
inline RunResult run(const AlgoConfig& config, EdgeStream& stream) {
  RunState rs(config, stream);
  switch (config.family) {
    case Family::kSimp: run_simp_on(rs); break;
    case Family::kImprv: run_imprv_on(rs); break;
    case Family::kPath: KPathRunner(rs).run(); break;
    case Family::kLev: KLevRunner(rs).run(); break;
  }
  return rs.finish();
}

inline RunResult run_simp(EdgeStream& stream) { return run(AlgoConfig{Family::kSimp, Variant::kO, 1}, stream); }
inline RunResult run_imprv(EdgeStream& stream) { return run(AlgoConfig{Family::kImprv, Variant::kO, 1}, stream); }

}  // namespace sdfs
