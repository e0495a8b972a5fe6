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

#include "robust_summary/threshold_grid.h"

#include <algorithm>
#include <stdexcept>

#include "robust_summary/geometric_grid.h"

namespace robust_summary {

std::vector<double> StaticGrid(SetValue eta, std::size_t k, double epsilon) {
  if (!(eta > 0.0)) throw std::invalid_argument("eta must be > 0");
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
  std::vector<double> out;
  const int lo = CeilExponent(eta, epsilon);
  const int hi = FloorExponent(static_cast<double>(k) * eta, epsilon);
  for (int i = lo; i <= hi; ++i) out.push_back(GridValue(i, epsilon));
  return out;
}

ThresholdGrid::ThresholdGrid(std::size_t k, std::size_t m, double epsilon,
                             std::optional<std::size_t> w, GridOptions options)
    : k_(k),
      m_(m),
      w_(w.value_or(k >= 1 ? MinBucketMultiplier(k, m) : 1)),
      epsilon_(epsilon),
      options_(options) {
  if (k_ < 2) throw std::invalid_argument("threshold grid needs k >= 2");
  if (!(epsilon_ > 0.0)) throw std::invalid_argument("epsilon must be > 0");
  if (w_ < 1) throw std::invalid_argument("w must be at least 1");
}

ThresholdGrid ThresholdGrid::Restore(std::size_t k, std::size_t m,
                                     double epsilon, std::size_t w,
                                     std::vector<LeaderEntry> leaders,
                                     std::map<int, Summary> instances) {
  ThresholdGrid grid(k, m, epsilon, w);
  if (leaders.size() > m + 1) {
    throw std::invalid_argument("more than m + 1 leaders");
  }
  grid.leaders_ = std::move(leaders);
  if (!std::is_sorted(grid.leaders_.begin(), grid.leaders_.end(),
                      [&](const auto& a, const auto& b) {
                        return grid.Outranks(a, b);
                      })) {
    throw std::invalid_argument("leaders are not in rank order");
  }
  for (const auto& [exponent, summary] : instances) {
    if (summary.plan().k != k || summary.plan().w != w ||
        summary.plan().tau != ThresholdFromOptimum(k, grid.Guess(exponent))) {
      throw std::invalid_argument("instance plan does not match its guess");
    }
  }
  grid.instances_ = std::move(instances);
  return grid;
}

double ThresholdGrid::Guess(int exponent) const {
  return GridValue(exponent, epsilon_);
}

bool ThresholdGrid::Window(SetValue value, int& lo, int& hi) const {
  if (!(value > 0.0)) return false;
  lo = CeilExponent(value, epsilon_);
  hi = FloorExponent(2.0 * static_cast<double>(k_) * value, epsilon_);
  return lo <= hi;
}

bool ThresholdGrid::Outranks(const LeaderEntry& a,
                             const LeaderEntry& b) const {
  if (a.value != b.value) return a.value > b.value;
  return a.id < b.id;
}

void ThresholdGrid::CreateInstances(SetValue value) {
  int lo, hi;
  if (!Window(value, lo, hi)) return;
  for (int i = lo; i <= hi; ++i) {
    if (instances_.contains(i)) continue;
    instances_.emplace(
        i, Summary(PlanStructure(k_, w_, ThresholdFromOptimum(k_, Guess(i))),
                   options_.build));
  }
}

void ThresholdGrid::DiscardUnjustified() {
  const std::set<int> keep = JustifiedExponents();
  for (auto it = instances_.begin(); it != instances_.end();) {
    if (keep.contains(it->first)) {
      ++it;
      continue;
    }
    if (options_.retain_discarded) {
      retired_.emplace(it->first, std::move(it->second));
    }
    it = instances_.erase(it);
  }
}

std::set<int> ThresholdGrid::JustifiedExponents() const {
  std::set<int> out;
  for (const auto& leader : leaders_) {
    int lo, hi;
    if (!Window(leader.value, lo, hi)) continue;
    for (int i = lo; i <= hi; ++i) out.insert(i);
  }
  return out;
}

void ThresholdGrid::Ingest(ElementId e, const SubmodularObjective& f) {
  ++elements_seen_;
  ++oracle_calls_;
  const ElementId single[] = {e};
  const SetValue singleton = f.Value(single);

  const LeaderEntry entry{e, singleton};
  const bool known = std::any_of(leaders_.begin(), leaders_.end(),
                                 [e](const auto& l) { return l.id == e; });
  if (!known) {
    if (leaders_.size() < m_ + 1) {
      leaders_.insert(std::upper_bound(leaders_.begin(), leaders_.end(), entry,
                                       [&](const auto& a, const auto& b) {
                                         return Outranks(a, b);
                                       }),
                      entry);
      CreateInstances(singleton);
    } else if (Outranks(entry, leaders_.back())) {
      leaders_.pop_back();
      leaders_.insert(std::upper_bound(leaders_.begin(), leaders_.end(), entry,
                                       [&](const auto& a, const auto& b) {
                                         return Outranks(a, b);
                                       }),
                      entry);
      CreateInstances(singleton);
      DiscardUnjustified();
    }
  }

  int lo, hi;
  if (!Window(singleton, lo, hi)) return;
  for (auto it = instances_.lower_bound(lo);
       it != instances_.end() && it->first <= hi; ++it) {
    const auto before = it->second.stats().oracle_calls;
    it->second.Ingest(e, f, singleton);
    oracle_calls_ += it->second.stats().oracle_calls - before;
  }
}

ElementSet ThresholdGrid::StoredElements() const {
  std::vector<ElementId> all;
  for (const auto& [exponent, summary] : instances_) {
    all.insert(all.end(), summary.InsertionOrder().begin(),
               summary.InsertionOrder().end());
  }
  return ElementSet(std::move(all));
}

GridMemoryReport ThresholdGrid::MemoryReport() const {
  GridMemoryReport report;
  report.live_instances = instances_.size();
  report.leader_count = leaders_.size();
  for (const auto& [exponent, summary] : instances_) {
    report.instance_sizes[exponent] = summary.size();
    report.total_stored += summary.size();
  }
  return report;
}

QueryResult GridQuery(const ThresholdGrid& grid, const ElementSet& removed,
                      std::size_t k, const SubmodularObjective& f) {
  QueryResult best;
  best.algorithm = kSummaryGreedyTag;
  std::uint64_t calls = 0;
  bool have = false;
  for (const auto& [exponent, summary] : grid.instances()) {
    QueryResult r = GreedyOnSummary(summary, removed, k, f);
    calls += r.oracle_calls;
    if (!have || r.value > best.value) {
      best = std::move(r);
      have = true;
    }
  }
  best.oracle_calls = calls;
  return best;
}

QueryResult GridSieveQuery(const ThresholdGrid& grid, const ElementSet& removed,
                           std::size_t k, double epsilon,
                           const SubmodularObjective& f) {
  QueryResult best;
  best.algorithm = kSummarySieveTag;
  std::uint64_t calls = 0;
  bool have = false;
  for (const auto& [exponent, summary] : grid.instances()) {
    QueryResult r = SieveOnSummary(summary, removed, k, epsilon, f);
    calls += r.oracle_calls;
    if (!have || r.value > best.value) {
      best = std::move(r);
      have = true;
    }
  }
  best.oracle_calls = calls;
  return best;
}

}  // namespace robust_summary
