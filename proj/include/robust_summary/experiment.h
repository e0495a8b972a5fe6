// Copyright 2026 The Authors.
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

//
// Desk-scale experiment protocol: build the summary once per k, then for
// every removal strategy and trial resolve a removal set E and compare the
// summary-based queries against baselines that are told E in advance.

#ifndef ROBUST_SUMMARY_EXPERIMENT_H_
#define ROBUST_SUMMARY_EXPERIMENT_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "robust_summary/io.h"
#include "robust_summary/objective.h"
#include "robust_summary/removal.h"
#include "robust_summary/synthetic.h"

namespace robust_summary {

// A count that may scale with k: absolute + per_k * k. Parsed from "500",
// "k", "2k".
struct SizeSpec {
  std::size_t absolute = 0;
  std::size_t per_k = 0;

  std::size_t Resolve(std::size_t k) const { return absolute + per_k * k; }
  std::string ToString() const;
  static SizeSpec Parse(const std::string& text);
};

struct StrategyConfig {
  RemovalStrategy strategy = RemovalStrategy::kRandomFromSummary;
  SizeSpec size{0, 1};
  std::string keep_genre;  // predicate strategy only

  std::string Label() const;
};

struct ExperimentConfig {
  std::string objective = "coverage";  // "coverage" or "movie"

  // Coverage input: an edge list, or a synthetic graph when empty.
  std::string edge_list;
  bool directed = true;
  PowerLawGraphOptions graph;

  // Movie input: a feature table plus user vector, or synthetic when empty.
  std::string feature_table;
  std::string user_vector;
  MovieDataOptions movies;
  double alpha = 0.9;

  std::vector<std::size_t> ks{10};
  SizeSpec m{0, 2};
  std::size_t w = 1;
  double epsilon = 0.2;
  std::string tau_mode = "grid";  // "grid" or "single"
  double tau = 0.0;               // single mode only
  std::vector<StrategyConfig> strategies{StrategyConfig{}};
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  std::size_t greedy_limit = 5000;  // run Greedy on V \ E only up to this |V|
  bool shuffle_stream = true;
  bool record_timing = true;
};

// Parses a JSON config. Unknown keys and malformed values throw
// std::invalid_argument.
ExperimentConfig ParseExperimentConfig(const std::string& json_text);

struct ExperimentData {
  std::unique_ptr<SubmodularObjective> objective;
  std::optional<FeatureTable> table;  // movie objective only
};

ExperimentData LoadExperimentData(const ExperimentConfig& config);

struct RunRow {
  std::string algorithm;
  std::size_t k = 0;
  std::size_t m = 0;
  std::size_t w = 0;
  std::string strategy;
  std::size_t trial = 0;
  SetValue value = 0.0;
  std::size_t removed = 0;
  std::size_t summary_size = 0;
  std::uint64_t oracle_calls = 0;
  double wall_ms = 0.0;
  std::vector<ElementId> chosen;
};

struct RunReport {
  std::vector<RunRow> rows;

  void WriteCsv(std::ostream& out) const;
  // Row-by-row equality on everything except wall time.
  bool SameResults(const RunReport& other) const;
  // Mean value keyed by (algorithm, k, strategy label).
  std::map<std::tuple<std::string, std::size_t, std::string>, double>
  MeanValues() const;
};

RunReport RunExperiment(const ExperimentConfig& config,
                        const ExperimentData& data);
RunReport RunExperiment(const ExperimentConfig& config);

}  // namespace robust_summary

#endif  // ROBUST_SUMMARY_EXPERIMENT_H_
