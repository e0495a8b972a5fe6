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
// Exhaustive ground truth for small instances.

#ifndef ROBUST_SUMMARY_EXACT_H_
#define ROBUST_SUMMARY_EXACT_H_

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "robust_summary/element.h"
#include "robust_summary/objective.h"

namespace robust_summary {

// Raised when an exhaustive computation would exceed its size guard.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxBruteForceUniverse = 25;
inline constexpr std::size_t kMaxVerifyUniverse = 16;

struct OptResult {
  ElementSet set;
  SetValue value = 0.0;
};

// Exact maximiser of f over subsets of `universe` with at most k elements.
// Among equal values the lexicographically smallest sorted id sequence wins.
OptResult BruteForceOpt(const SubmodularObjective& f,
                        const ElementSet& universe, std::size_t k);

enum class ThresholdMode {
  // One summary per removal set, tau derived from that set's exact optimum.
  // A test device for the fixed-threshold guarantee, not a deployable mode.
  kSingle,
  // One OPT-free threshold grid built once and queried for every removal set.
  kGrid,
};

struct VerifyOptions {
  ThresholdMode mode = ThresholdMode::kSingle;
  double epsilon = 0.1;               // grid mode only
  std::optional<std::size_t> w;       // defaults to MinBucketMultiplier(k, m)
  std::string instance = "unnamed";  // carried into the report
};

struct RobustnessReport {
  std::string instance;
  ThresholdMode mode = ThresholdMode::kSingle;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t m = 0;
  std::size_t w = 0;
  double epsilon = 0.0;
  double c_target = 0.0;
  double worst_ratio = std::numeric_limits<double>::infinity();
  ElementSet worst_removal;
  std::uint64_t cases_checked = 0;
  std::uint64_t zero_opt_skipped = 0;

  bool passed() const { return worst_ratio >= c_target; }
};

// Enumerates every removal set E ⊆ V with |E| <= m, where V is the set of
// stream elements, answers the query on the summary minus E and compares it
// with the exact optimum of V \ E. Removal sets whose optimum is zero are
// skipped and counted. Requires k >= 2 and |V| <= kMaxVerifyUniverse.
RobustnessReport VerifyRobustness(std::span<const ElementId> stream,
                                  const SubmodularObjective& f, std::size_t k,
                                  std::size_t m,
                                  const VerifyOptions& options = {});

// Number of subsets of an n-set with at most m elements.
std::uint64_t CountRemovalSets(std::size_t n, std::size_t m);

}  // namespace robust_summary

#endif  // ROBUST_SUMMARY_EXACT_H_
