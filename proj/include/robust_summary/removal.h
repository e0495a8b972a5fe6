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
// Removal-set generators used by the experiment harness.

#ifndef ROBUST_SUMMARY_REMOVAL_H_
#define ROBUST_SUMMARY_REMOVAL_H_

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>

#include "robust_summary/element.h"
#include "robust_summary/objective.h"

namespace robust_summary {

enum class RemovalStrategy {
  kRandomFromSummary,
  kGreedyFromSummary,
  kPopularityWeighted,
  kPredicate,
};

std::string_view StrategyName(RemovalStrategy s);
// Inverse of StrategyName; throws std::invalid_argument.
RemovalStrategy ParseStrategy(std::string_view name);

struct RemovalSpec {
  RemovalStrategy strategy = RemovalStrategy::kRandomFromSummary;
  std::size_t size = 0;    // requested
  std::uint64_t seed = 0;  // 0 for deterministic strategies
  ElementSet removed;
};

// Uniform sample of min(count, |pool|) elements without replacement.
RemovalSpec RemoveRandom(const ElementSet& pool, std::size_t count,
                         std::uint64_t seed);

// Repeatedly removes the element of the current pool P whose removal costs
// the most, argmax_e f(P) - f(P \ {e}), ties to the smallest id.
RemovalSpec RemoveGreedyAdversarial(const ElementSet& pool, std::size_t count,
                                    const SubmodularObjective& f);

// Sequential sampling without replacement with probability proportional to
// weight. Once every positive-weight element is gone the remaining draws are
// uniform. Throws std::invalid_argument if a pool element has no weight, a
// weight is negative, or all weights are zero.
RemovalSpec RemoveWeighted(const ElementSet& pool, std::size_t count,
                           const std::unordered_map<ElementId, double>& weights,
                           std::uint64_t seed);

// Removes every pool element for which `keep` is false.
RemovalSpec RemoveByPredicate(const ElementSet& pool,
                              const std::function<bool(ElementId)>& keep);

}  // namespace robust_summary

#endif  // ROBUST_SUMMARY_REMOVAL_H_
