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
#include <atomic>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "sdfs/algorithms.hpp"
#include "sdfs/edge_stream.hpp"
#include "sdfs/generators.hpp"
#include "sdfs/validation.hpp"

namespace sdfs {

struct GenSpec {
  enum class Model { kErdosRenyi, kPowerLaw };
  Model model = Model::kErdosRenyi;
  std::size_t n = 0;
  std::uint64_t m = 0;
  double exponent = 3.0;

  std::string label() const {
    std::ostringstream out;
    out << (model == Model::kErdosRenyi ? "er" : "plaw") << "-n" << n << "-m" << m;
    if (model == Model::kPowerLaw) out << "-exp" << exponent;
    return out.str();
  }

  std::vector<Edge> generate(std::uint64_t seed) const {
    return model == Model::kErdosRenyi ? gen_gnm(n, m, seed) : gen_powerlaw(n, m, exponent, seed);
  }

  /// Parses "er:n=N,m=M" or "plaw:n=N,m=M[,exp=E]".
  static GenSpec parse(const std::string& text) {
    GenSpec g;
    auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("generator spec needs a model prefix: " + text);
    std::string model = text.substr(0, colon);
    if (model == "er") g.model = Model::kErdosRenyi;
    else if (model == "plaw") g.model = Model::kPowerLaw;
    else throw std::invalid_argument("unknown generator model '" + model + "'");
    bool have_n = false, have_m = false;
    std::stringstream params(text.substr(colon + 1));
    std::string kv;
    while (std::getline(params, kv, ',')) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("bad generator parameter '" + kv + "'");
      std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
      try {
        if (key == "n") g.n = std::stoull(value), have_n = true;
        else if (key == "m") g.m = std::stoull(value), have_m = true;
        else if (key == "exp") g.exponent = std::stod(value);
        else throw std::invalid_argument("unknown generator parameter '" + key + "'");
      } catch (const std::logic_error&) {
        throw std::invalid_argument("bad generator parameter '" + kv + "'");
      }
    }
    if (!have_n || !have_m) throw std::invalid_argument("generator spec needs n and m: " + text);
    return g;
  }
};

/// A graph source: an edge-list file or a generator.
struct InputSpec {
  std::optional<std::filesystem::path> file;
  GenSpec gen;

  std::string label() const { return file ? file->filename().string() : gen.label(); }
};

struct ExperimentSpec {
  std::vector<InputSpec> inputs;
  std::vector<std::string> algorithms;
  std::vector<std::uint32_t> ks{1};
  std::vector<std::uint64_t> seeds{1};
  std::uint32_t repetitions = 1;
  unsigned workers = 1;
  bool trace_budget = false;
};

struct ExperimentRow {
  std::string dataset;
  std::size_t n = 0;
  std::size_t m = 0;
  std::string algo;
  std::uint32_t k = 0;
  std::uint64_t seed = 0;
  std::size_t passes = 0;
  std::uint64_t peak_stored_edges = 0;
  std::uint32_t height = 0;
  bool valid = false;
};

inline const char* kCsvHeader = "dataset,n,m,algo,k,seed,passes,peak_stored_edges,height,valid";

inline void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  out << kCsvHeader << '\n';
  for (const ExperimentRow& r : rows)
    out << r.dataset << ',' << r.n << ',' << r.m << ',' << r.algo << ',' << r.k << ',' << r.seed << ',' << r.passes
        << ',' << r.peak_stored_edges << ',' << r.height << ',' << (r.valid ? "true" : "false") << '\n';
}

class InvalidRunError : public std::runtime_error {
 public:
  InvalidRunError(const std::string& what, ExperimentRow row) : std::runtime_error(what), row_(std::move(row)) {}
  const ExperimentRow& row() const { return row_; }

 private:
  ExperimentRow row_;
};

struct ExperimentOutput {
  std::vector<ExperimentRow> rows;
  std::string budget_trace;  // CSV: run,event,current
};

namespace detail {

struct LoadedGraph {
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::optional<std::filesystem::path> file;
};

inline LoadedGraph load_input(const InputSpec& in, std::uint64_t seed) {
  LoadedGraph g;
  if (in.file) {
    if (!std::filesystem::exists(*in.file)) throw std::runtime_error("input file not found: " + in.file->string());
    auto [n, edges] = read_edge_list(*in.file);
    g.n = n;
    g.edges = std::move(edges);
    g.file = in.file;
  } else {
    g.n = in.gen.n;
    g.edges = in.gen.generate(seed);
  }
  return g;
}

}  // namespace detail

/// Runs every (input, algorithm, k, seed) cell, validates each output tree
/// and returns one row per cell in enumeration order. Cells run on up to
/// `workers` threads; each run owns all of its state.
inline ExperimentOutput run_experiment(const ExperimentSpec& spec) {
  std::vector<AlgoConfig> algos;
  for (const std::string& name : spec.algorithms) {
    if (name == "all") {
      for (const std::string& a : AlgoConfig::all_names()) algos.push_back(*AlgoConfig::parse(a, 1));
      continue;
    }
    auto c = AlgoConfig::parse(name, 1);
    if (!c) throw std::invalid_argument("unknown algorithm '" + name + "'");
    algos.push_back(*c);
  }
  for (std::uint32_t k : spec.ks)
    if (k == 0) throw std::invalid_argument("k must be positive");
  if (spec.repetitions == 0) throw std::invalid_argument("repetitions must be positive");

  struct Cell {
    std::size_t input, algo, k, seed;
  };
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < spec.inputs.size(); ++i)
    for (std::size_t s = 0; s < spec.seeds.size(); ++s)
      for (std::size_t a = 0; a < algos.size(); ++a)
        for (std::size_t k = 0; k < spec.ks.size(); ++k) cells.push_back({i, a, k, s});

  // Graphs are shared read-only between the cells that use them.
  std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<const detail::LoadedGraph>> graphs;
  for (const Cell& c : cells) {
    auto key = std::make_pair(c.input, spec.inputs[c.input].file ? 0 : c.seed);
    if (!graphs.count(key))
      graphs[key] = std::make_shared<const detail::LoadedGraph>(
          detail::load_input(spec.inputs[c.input], spec.seeds[c.seed]));
  }

  std::vector<ExperimentRow> rows(cells.size());
  std::vector<std::string> traces(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
  std::atomic<std::size_t> next{0};

  auto work = [&]() {
    for (std::size_t idx; (idx = next.fetch_add(1)) < cells.size();) {
      try {
        const Cell& c = cells[idx];
        const InputSpec& in = spec.inputs[c.input];
        const auto& g = *graphs.at(std::make_pair(c.input, in.file ? 0 : c.seed));
        AlgoConfig cfg = algos[c.algo];
        cfg.k = spec.ks[c.k];
        cfg.trace_budget = spec.trace_budget;
        ExperimentRow& row = rows[idx];
        row.dataset = in.label();
        row.n = g.n;
        row.m = g.edges.size();
        row.algo = cfg.name();
        row.k = cfg.k;
        row.seed = spec.seeds[c.seed];

        std::optional<RunResult> first;
        for (std::uint32_t rep = 0; rep < spec.repetitions; ++rep) {
          EdgeStream stream = g.file ? EdgeStream::from_file(*g.file, g.n) : EdgeStream::from_edges(g.n, g.edges);
          RunResult res = run(cfg, stream);
          if (!first) {
            first = std::move(res);
          } else if (res.report.passes != first->report.passes ||
                     res.report.peak_stored_edges != first->report.peak_stored_edges) {
            throw std::runtime_error("non-deterministic run of " + row.algo + " on " + row.dataset);
          }
        }
        row.passes = first->report.passes;
        row.peak_stored_edges = first->report.peak_stored_edges;
        row.height = first->report.height;
        AdjacencyGraph adj(g.n, g.edges);
        ValidityReport rep = check_dfs(adj, first->tree);
        row.valid = rep.ok() && row.peak_stored_edges <= first->report.budget;
        if (!row.valid) {
          std::string why = !rep.is_spanning ? "tree does not span the graph"
                            : !rep.is_dfs    ? "cross edge " + to_string(*rep.offending_edge)
                                             : "budget exceeded";
          throw InvalidRunError("invalid run of " + row.algo + " (k=" + std::to_string(row.k) + ") on " +
                                    row.dataset + ": " + why,
                                row);
        }
        if (spec.trace_budget) {
          std::ostringstream t;
          first->ledger.write_trace_csv(t, row.dataset + "/" + row.algo + "/k=" + std::to_string(row.k) +
                                               "/seed=" + std::to_string(row.seed));
          traces[idx] = t.str();
        }
      } catch (...) {
        errors[idx] = std::current_exception();
      }
    }
  };

  unsigned workers = std::max(1u, std::min<unsigned>(spec.workers, static_cast<unsigned>(cells.size())));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  ExperimentOutput out;
  out.rows = std::move(rows);
  for (std::string& t : traces) out.budget_trace += t;
  return out;
}

/// floor(100 * (passes_o - passes_n) / passes_o).
inline std::int64_t reduction_percent(std::uint64_t passes_o, std::uint64_t passes_n) {
  if (passes_o == 0) return 0;
  std::int64_t num = 100 * (static_cast<std::int64_t>(passes_o) - static_cast<std::int64_t>(passes_n));
  std::int64_t den = static_cast<std::int64_t>(passes_o);
  std::int64_t q = num / den;
  if ((num % den != 0) && (num < 0)) --q;
  return q;
}

struct ImprovementRow {
  std::string dataset;
  std::uint64_t seed = 0;
  std::string family;  // "kpath" or "klev"
  std::uint32_t k = 0;
  std::size_t passes_o = 0;
  std::size_t passes_n = 0;
  std::int64_t reduction = 0;
};

struct ImprovementSummary {
  std::vector<ImprovementRow> rows;
  /// (family, k) -> floor of the mean reduction over that column.
  std::map<std::pair<std::string, std::uint32_t>, std::int64_t> averages;
  std::vector<std::string> warnings;
};

/// Pairs every O-variant row with the N-variant row of the same dataset,
/// seed, family and k.
inline ImprovementSummary improvement_summary(const std::vector<ExperimentRow>& rows) {
  using Key = std::tuple<std::string, std::uint64_t, std::string, std::uint32_t>;
  std::map<Key, std::pair<const ExperimentRow*, const ExperimentRow*>> pairs;
  std::vector<Key> order;
  for (const ExperimentRow& r : rows) {
    if (r.algo.size() < 2) continue;
    char variant = r.algo.back();
    std::string family = r.algo.substr(0, r.algo.size() - 1);
    if ((variant != 'O' && variant != 'N') || (family != "kpath" && family != "klev")) continue;
    Key key{r.dataset, r.seed, family, r.k};
    auto [it, inserted] = pairs.try_emplace(key, nullptr, nullptr);
    if (inserted) order.push_back(key);
    (variant == 'O' ? it->second.first : it->second.second) = &r;
  }
  ImprovementSummary out;
  std::map<std::pair<std::string, std::uint32_t>, std::pair<std::int64_t, std::int64_t>> sums;
  for (const Key& key : order) {
    auto [o, n] = pairs[key];
    const auto& [dataset, seed, family, k] = key;
    if (!o || !n) {
      out.warnings.push_back("no " + std::string(o ? "N" : "O") + "-variant row for " + dataset + " " + family +
                             " k=" + std::to_string(k) + " seed=" + std::to_string(seed) + "; skipped");
      continue;
    }
    ImprovementRow row{dataset, seed, family, k, o->passes, n->passes, reduction_percent(o->passes, n->passes)};
    auto& s = sums[{family, k}];
    s.first += row.reduction;
    s.second += 1;
    out.rows.push_back(std::move(row));
  }
  for (const auto& [key, s] : sums) {
    std::int64_t q = s.first / s.second;
    if (s.first % s.second != 0 && s.first < 0) --q;
    out.averages[key] = q;
  }
  return out;
}

inline void write_improvement_csv(std::ostream& out, const ImprovementSummary& summary) {
  out << "dataset,seed,family,k,passes_o,passes_n,reduction_pct\n";
  for (const ImprovementRow& r : summary.rows)
    out << r.dataset << ',' << r.seed << ',' << r.family << ',' << r.k << ',' << r.passes_o << ',' << r.passes_n << ','
        << r.reduction << '\n';
  for (const auto& [key, avg] : summary.averages)
    out << "Average,," << key.first << ',' << key.second << ",,," << avg << '\n';
}

}  // namespace sdfs
