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

#include "robust_summary/removal.h"

#include <algorithm>
#include <iterator>
#include <random>
#include <stdexcept>
#include <vector>

namespace robust_summary {

std::string_view StrategyName(RemovalStrategy s) {
  switch (s) {
    case RemovalStrategy::kRandomFromSummary:
      return "random-from-S";
    case RemovalStrategy::kGreedyFromSummary:
      return "greedy-from-S";
    case RemovalStrategy::kPopularityWeighted:
      return "popularity-weighted";
    case RemovalStrategy::kPredicate:
      return "predicate";
  }
  return "unknown";
}

RemovalStrategy ParseStrategy(std::string_view name) {
  for (auto s : {RemovalStrategy::kRandomFromSummary,
                 RemovalStrategy::kGreedyFromSummary,
                 RemovalStrategy::kPopularityWeighted,
                 RemovalStrategy::kPredicate}) {
    if (StrategyName(s) == name) return s;
  }
  throw std::invalid_argument("unknown removal strategy '" +
                              std::string(name) + "'");
}

RemovalSpec RemoveRandom(const ElementSet& pool, std::size_t count,
                         std::uint64_t seed) {
  RemovalSpec spec{.strategy = RemovalStrategy::kRandomFromSummary,
                   .size = count,
                   .seed = seed,
                   .removed = {}};
  std::mt19937_64 rng(seed);
  std::vector<ElementId> picked;
  std::sample(pool.begin(), pool.end(), std::back_inserter(picked),
              std::min(count, pool.size()), rng);
  spec.removed = ElementSet(std::move(picked));
  return spec;
}

RemovalSpec RemoveGreedyAdversarial(const ElementSet& pool, std::size_t count,
                                    const SubmodularObjective& f) {
  RemovalSpec spec{.strategy = RemovalStrategy::kGreedyFromSummary,
                   .size = count,
                   .seed = 0,
                   .removed = {}};
  std::vector<ElementId> current(pool.begin(), pool.end());
  std::vector<ElementId> without;
  while (spec.removed.size() < count && !current.empty()) {
    const SetValue full = f.Value(current);
    std::size_t best = 0;
    SetValue best_loss = 0.0;
    for (std::size_t i = 0; i < current.size(); ++i) {
      without.assign(current.begin(), current.end());
      without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
      const SetValue loss = full - f.Value(without);
      if (i == 0 || loss > best_loss) {
        best = i;
        best_loss = loss;
      }
    }
    spec.removed.Insert(current[best]);
    current.erase(current.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return spec;
}

RemovalSpec RemoveWeighted(const ElementSet& pool, std::size_t count,
                           const std::unordered_map<ElementId, double>& weights,
                           std::uint64_t seed) {
  RemovalSpec spec{.strategy = RemovalStrategy::kPopularityWeighted,
                   .size = count,
                   .seed = seed,
                   .removed = {}};
  std::vector<ElementId> ids(pool.begin(), pool.end());
  std::vector<double> w;
  w.reserve(ids.size());
  double total = 0.0;
  for (ElementId e : ids) {
    auto it = weights.find(e);
    if (it == weights.end()) {
      throw std::invalid_argument("no weight for element " +
                                  std::to_string(Index(e)));
    }
    if (!(it->second >= 0.0)) {
      throw std::invalid_argument("weights must be non-negative");
    }
    w.push_back(it->second);
    total += it->second;
  }
  if (!ids.empty() && !(total > 0.0)) {
    throw std::invalid_argument("all weights are zero");
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<char> taken(ids.size(), 0);
  const std::size_t target = std::min(count, ids.size());
  while (spec.removed.size() < target) {
    double remaining = 0.0;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (!taken[i]) remaining += w[i];
    }
    std::size_t pick = ids.size();
    if (remaining > 0.0) {
      double r = unit(rng) * remaining;
      for (std::size_t i = 0; i < ids.size(); ++i) {
        if (taken[i] || w[i] <= 0.0) continue;
        pick = i;
        r -= w[i];
        if (r < 0.0) break;
      }
    } else {
      std::vector<std::size_t> open;
      for (std::size_t i = 0; i < ids.size(); ++i) {
        if (!taken[i]) open.push_back(i);
      }
      pick = open[std::uniform_int_distribution<std::size_t>(
          0, open.size() - 1)(rng)];
    }
    taken[pick] = 1;
    spec.removed.Insert(ids[pick]);
  }
  return spec;
}

RemovalSpec RemoveByPredicate(const ElementSet& pool,
                              const std::function<bool(ElementId)>& keep) {
  RemovalSpec spec{.strategy = RemovalStrategy::kPredicate,
                   .size = 0,
                   .seed = 0,
                   .removed = {}};
  std::vector<ElementId> out;
  for (ElementId e : pool) {
    if (!keep(e)) out.push_back(e);
  }
  spec.removed = ElementSet(std::move(out));
  spec.size = spec.removed.size();
  return spec;
}

}  // namespace robust_summary
