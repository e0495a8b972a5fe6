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
// Summaries that do not need the optimum value up front.
//
// The grid runs one partitioned summary per guess g = (1 + eps)^i of the
// post-removal optimum, each with tau = ThresholdFromOptimum(k, g). Because
// the adversary may delete up to m of the largest elements, the grid tracks
// the m + 1 largest singleton values seen so far (the leaders). A guess is
// live while some leader value v satisfies v <= g <= 2 k v. When a new
// element enters the leaders, the instances for its window are created (empty,
// nothing is replayed) and instances no leader justifies any more are
// discarded. Every arriving element e is offered to the live instances with
// f(e) <= g <= 2 k f(e).

#ifndef ROBUST_SUMMARY_THRESHOLD_GRID_H_
#define ROBUST_SUMMARY_THRESHOLD_GRID_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "robust_summary/element.h"
#include "robust_summary/objective.h"
#include "robust_summary/query.h"
#include "robust_summary/summary.h"

namespace robust_summary {

// The powers (1 + eps)^i lying in [eta, k * eta], ascending.
std::vector<double> StaticGrid(SetValue eta, std::size_t k, double epsilon);

struct GridOptions {
  // Keep discarded instances around (see ThresholdGrid::retired) for audits.
  bool retain_discarded = false;
  BuildOptions build;
};

struct LeaderEntry {
  ElementId id;
  SetValue value;

  friend bool operator==(const LeaderEntry&, const LeaderEntry&) = default;
};

struct GridMemoryReport {
  std::size_t live_instances = 0;
  std::size_t total_stored = 0;  // counted once per instance holding it
  std::size_t leader_count = 0;
  std::map<int, std::size_t> instance_sizes;  // by grid exponent
};

class ThresholdGrid {
 public:
  // `w` defaults to MinBucketMultiplier(k, m). Throws std::invalid_argument
  // for k < 2 or eps <= 0.
  ThresholdGrid(std::size_t k, std::size_t m, double epsilon,
                std::optional<std::size_t> w = {}, GridOptions options = {});

  static ThresholdGrid Restore(std::size_t k, std::size_t m, double epsilon,
                               std::size_t w,
                               std::vector<LeaderEntry> leaders,
                               std::map<int, Summary> instances);

  void Ingest(ElementId e, const SubmodularObjective& f);

  std::size_t k() const { return k_; }
  std::size_t m() const { return m_; }
  std::size_t w() const { return w_; }
  double epsilon() const { return epsilon_; }
  double Guess(int exponent) const;

  // Largest singleton values first; equal values ordered by id.
  const std::vector<LeaderEntry>& leaders() const { return leaders_; }
  const std::map<int, Summary>& instances() const { return instances_; }
  const std::multimap<int, Summary>& retired() const { return retired_; }
  std::uint64_t elements_seen() const { return elements_seen_; }
  std::uint64_t oracle_calls() const { return oracle_calls_; }

  // Exponents justified by at least one leader.
  std::set<int> JustifiedExponents() const;
  // Distinct elements stored by any live instance.
  ElementSet StoredElements() const;
  GridMemoryReport MemoryReport() const;

 private:
  bool Window(SetValue value, int& lo, int& hi) const;
  bool Outranks(const LeaderEntry& a, const LeaderEntry& b) const;
  void CreateInstances(SetValue value);
  void DiscardUnjustified();

  std::size_t k_;
  std::size_t m_;
  std::size_t w_;
  double epsilon_;
  GridOptions options_;
  std::vector<LeaderEntry> leaders_;
  std::map<int, Summary> instances_;
  std::multimap<int, Summary> retired_;
  std::uint64_t elements_seen_ = 0;
  std::uint64_t oracle_calls_ = 0;
};

// Greedy on every instance minus `removed`; the best result wins, ties going
// to the smallest guess. An empty grid yields an empty result.
QueryResult GridQuery(const ThresholdGrid& grid, const ElementSet& removed,
                      std::size_t k, const SubmodularObjective& f);

// Same as GridQuery with the sieve as the second stage.
QueryResult GridSieveQuery(const ThresholdGrid& grid, const ElementSet& removed,
                           std::size_t k, double epsilon,
                           const SubmodularObjective& f);

}  // namespace robust_summary

#endif  // ROBUST_SUMMARY_THRESHOLD_GRID_H_
