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
// Query-stage algorithms: greedy and sieve-streaming over a candidate pool,
// their summary-restricted variants, and the random-sample baseline.
//
// Ties are always broken towards the smallest element id.

#ifndef ROBUST_SUMMARY_QUERY_H_
#define ROBUST_SUMMARY_QUERY_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "robust_summary/element.h"
#include "robust_summary/objective.h"
#include "robust_summary/summary.h"

namespace robust_summary {

inline constexpr char kGreedyTag[] = "Greedy";
inline constexpr char kSummaryGreedyTag[] = "STAR-T-Greedy";
inline constexpr char kSummarySieveTag[] = "STAR-T-Sieve";
inline constexpr char kSieveTag[] = "Sieve-Streaming";
inline constexpr char kRandomTag[] = "Random";

struct QueryResult {
  std::vector<ElementId> chosen;  // in selection order
  SetValue value = 0.0;           // f(chosen)
  std::uint64_t oracle_calls = 0;
  std::string algorithm;

  ElementSet ChosenSet() const { return ElementSet(chosen); }
};

struct GreedyStep {
  ElementId pick;
  SetValue gain;
};

struct GreedyOptions {
  // Re-validate stale gains from a priority queue instead of re-scoring every
  // candidate each round. Exact for submodular f.
  bool lazy = true;
  // When set, receives one entry per selected element.
  std::vector<GreedyStep>* trace = nullptr;
};

// Repeatedly adds the candidate of largest marginal gain until k elements are
// chosen or no candidate has positive gain.
QueryResult Greedy(const SubmodularObjective& f, const ElementSet& candidates,
                   std::size_t k, const GreedyOptions& options = {});

// Greedy over the summary minus `removed`. Ids in `removed` that are not in
// the summary are ignored.
QueryResult GreedyOnSummary(const Summary& summary, const ElementSet& removed,
                            std::size_t k, const SubmodularObjective& f);

// Single-pass threshold sieve. Keeps one candidate set per guess
// v = (1 + eps)^i with eta <= v <= 2 k eta, eta being the largest singleton
// value seen so far, and adds e to S_v when |S_v| < k and
//   f(e | S_v) >= (v / 2 - f(S_v)) / (k - |S_v|).
// Returns the best candidate set.
QueryResult SieveStreaming(std::span<const ElementId> stream, std::size_t k,
                           double epsilon, const SubmodularObjective& f);

// Sieve over the summary minus `removed`, in the order elements were stored.
QueryResult SieveOnSummary(const Summary& summary, const ElementSet& removed,
                           std::size_t k, double epsilon,
                           const SubmodularObjective& f);

// Draws `sample_size` elements of `pool` uniformly without replacement and
// runs greedy on the sample.
QueryResult RandomBaseline(const ElementSet& pool, std::size_t sample_size,
                           std::size_t k, std::uint64_t seed,
                           const SubmodularObjective& f);

}  // namespace robust_summary

#endif  // ROBUST_SUMMARY_QUERY_H_
