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

#include "robust_summary/exact.h"

#include <functional>
#include <vector>

#include "robust_summary/query.h"
#include "robust_summary/summary.h"
#include "robust_summary/threshold_grid.h"

namespace robust_summary {
namespace {

// Visits every subset of `items` with at most `limit` elements in
// lexicographic order of the sorted id sequence, starting with the empty set.
void ForEachSubset(const std::vector<ElementId>& items, std::size_t limit,
                   const std::function<void(std::span<const ElementId>)>& fn) {
  std::vector<ElementId> current;
  std::function<void(std::size_t)> recurse = [&](std::size_t start) {
    fn(current);
    if (current.size() == limit) return;
    for (std::size_t i = start; i < items.size(); ++i) {
      current.push_back(items[i]);
      recurse(i + 1);
      current.pop_back();
    }
  };
  recurse(0);
}

}  // namespace

std::uint64_t CountRemovalSets(std::size_t n, std::size_t m) {
  std::uint64_t total = 0, binom = 1;
  for (std::size_t j = 0; j <= m && j <= n; ++j) {
    total += binom;
    binom = binom * (n - j) / (j + 1);
  }
  return total;
}

OptResult BruteForceOpt(const SubmodularObjective& f,
                        const ElementSet& universe, std::size_t k) {
  if (universe.size() > kMaxBruteForceUniverse) {
    throw GuardError("brute force refused: universe of " +
                     std::to_string(universe.size()) + " exceeds " +
                     std::to_string(kMaxBruteForceUniverse));
  }
  OptResult best;
  bool have = false;
  const std::vector<ElementId> items(universe.begin(), universe.end());
  ForEachSubset(items, k, [&](std::span<const ElementId> subset) {
    const SetValue v = f.Value(subset);
    if (!have || v > best.value) {
      best.set = ElementSet(subset);
      best.value = v;
      have = true;
    }
  });
  return best;
}

RobustnessReport VerifyRobustness(std::span<const ElementId> stream,
                                  const SubmodularObjective& f, std::size_t k,
                                  std::size_t m,
                                  const VerifyOptions& options) {
  const ElementSet universe(stream);
  if (universe.size() > kMaxVerifyUniverse) {
    throw GuardError("verification refused: universe of " +
                     std::to_string(universe.size()) + " exceeds " +
                     std::to_string(kMaxVerifyUniverse));
  }
  if (k < 2) throw std::invalid_argument("verification needs k >= 2");

  RobustnessReport report;
  report.instance = options.instance;
  report.mode = options.mode;
  report.n = universe.size();
  report.k = k;
  report.m = m;
  report.w = options.w.value_or(MinBucketMultiplier(k, m));
  report.c_target = GuaranteedRatio(k);
  if (options.mode == ThresholdMode::kGrid) {
    report.epsilon = options.epsilon;
    report.c_target /= 1.0 + options.epsilon;
  }

  std::optional<ThresholdGrid> grid;
  if (options.mode == ThresholdMode::kGrid) {
    grid.emplace(k, m, options.epsilon, report.w);
    for (ElementId e : stream) grid->Ingest(e, f);
  }

  const std::vector<ElementId> items(universe.begin(), universe.end());
  ForEachSubset(items, m, [&](std::span<const ElementId> removal) {
    const ElementSet removed(removal);
    const OptResult opt = BruteForceOpt(f, universe.Difference(removed), k);
    if (opt.value <= 0.0) {
      ++report.zero_opt_skipped;
      return;
    }
    QueryResult answer;
    if (grid) {
      answer = GridQuery(*grid, removed, k, f);
    } else {
      const Summary summary =
          BuildSummary(stream, k, report.w,
                       ThresholdFromOptimum(k, opt.value), f);
      answer = GreedyOnSummary(summary, removed, k, f);
    }
    ++report.cases_checked;
    const double ratio = answer.value / opt.value;
    if (ratio < report.worst_ratio) {
      report.worst_ratio = ratio;
      report.worst_removal = removed;
    }
  });
  return report;
}

}  // namespace robust_summary
