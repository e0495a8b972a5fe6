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

#include "robust_summary/query.h"

#include <algorithm>
#include <iterator>
#include <map>
#include <queue>
#include <random>
#include <stdexcept>

#include "robust_summary/geometric_grid.h"

namespace robust_summary {
namespace {

// Evaluates f and tallies the calls made on behalf of one query.
class CallCounter {
 public:
  explicit CallCounter(const SubmodularObjective& f) : f_(f) {}
  SetValue operator()(std::span<const ElementId> set) {
    ++calls_;
    return f_.Value(set);
  }
  std::uint64_t calls() const { return calls_; }

 private:
  const SubmodularObjective& f_;
  std::uint64_t calls_ = 0;
};

QueryResult NaiveGreedy(CallCounter& eval, const ElementSet& candidates,
                        std::size_t k, std::vector<GreedyStep>* trace) {
  QueryResult result;
  std::vector<ElementId> remaining(candidates.begin(), candidates.end());
  std::vector<ElementId> probe;
  while (result.chosen.size() < k && !remaining.empty()) {
    std::size_t best = remaining.size();
    SetValue best_gain = 0.0, best_value = 0.0;
    for (std::size_t c = 0; c < remaining.size(); ++c) {
      probe = result.chosen;
      probe.push_back(remaining[c]);
      const SetValue with = eval(probe);
      const SetValue gain = with - result.value;
      if (best == remaining.size() || gain > best_gain) {
        best = c;
        best_gain = gain;
        best_value = with;
      }
    }
    if (best_gain <= 0.0) break;
    result.chosen.push_back(remaining[best]);
    result.value = best_value;
    if (trace) trace->push_back({remaining[best], best_gain});
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return result;
}

struct LazyEntry {
  SetValue gain;
  SetValue value;  // f(chosen ∪ {id}) when the gain was computed
  ElementId id;
  std::size_t round;
};

// Max-heap order: larger gain first, then smaller id.
struct LazyOrder {
  bool operator()(const LazyEntry& a, const LazyEntry& b) const {
    if (a.gain != b.gain) return a.gain < b.gain;
    return a.id > b.id;
  }
};

QueryResult LazyGreedy(CallCounter& eval, const ElementSet& candidates,
                       std::size_t k, std::vector<GreedyStep>* trace) {
  QueryResult result;
  std::priority_queue<LazyEntry, std::vector<LazyEntry>, LazyOrder> heap;
  for (ElementId e : candidates) {
    const ElementId single[] = {e};
    const SetValue v = eval(single);
    heap.push({v, v, e, 0});
  }
  std::vector<ElementId> probe;
  std::size_t round = 0;
  while (result.chosen.size() < k && !heap.empty()) {
    LazyEntry top = heap.top();
    heap.pop();
    if (top.round == round) {
      if (top.gain <= 0.0) break;
      result.chosen.push_back(top.id);
      result.value = top.value;
      if (trace) trace->push_back({top.id, top.gain});
      ++round;
      continue;
    }
    probe = result.chosen;
    probe.push_back(top.id);
    top.value = eval(probe);
    top.gain = top.value - result.value;
    top.round = round;
    heap.push(top);
  }
  return result;
}

}  // namespace

QueryResult Greedy(const SubmodularObjective& f, const ElementSet& candidates,
                   std::size_t k, const GreedyOptions& options) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  CallCounter eval(f);
  QueryResult result = options.lazy
                           ? LazyGreedy(eval, candidates, k, options.trace)
                           : NaiveGreedy(eval, candidates, k, options.trace);
  result.oracle_calls = eval.calls();
  result.algorithm = kGreedyTag;
  return result;
}

QueryResult GreedyOnSummary(const Summary& summary, const ElementSet& removed,
                            std::size_t k, const SubmodularObjective& f) {
  QueryResult result = Greedy(f, summary.Elements().Difference(removed), k);
  result.algorithm = kSummaryGreedyTag;
  return result;
}

QueryResult SieveStreaming(std::span<const ElementId> stream, std::size_t k,
                           double epsilon, const SubmodularObjective& f) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
  struct Candidate {
    std::vector<ElementId> members;
    SetValue value = 0.0;
  };
  CallCounter eval(f);
  std::map<int, Candidate> sieves;  // keyed by grid exponent
  SetValue eta = 0.0;
  std::vector<ElementId> probe;

  for (ElementId e : stream) {
    const ElementId single[] = {e};
    const SetValue singleton = eval(single);
    if (singleton > eta) {
      eta = singleton;
      const int lo = CeilExponent(eta, epsilon);
      const int hi = FloorExponent(2.0 * static_cast<double>(k) * eta, epsilon);
      sieves.erase(sieves.begin(), sieves.lower_bound(lo));
      for (int i = lo; i <= hi; ++i) sieves.try_emplace(i);
    }
    for (auto& [exponent, c] : sieves) {
      if (c.members.size() >= k) continue;
      if (std::find(c.members.begin(), c.members.end(), e) != c.members.end()) {
        continue;
      }
      const double v = GridValue(exponent, epsilon);
      const double needed = (v / 2.0 - c.value) /
                            static_cast<double>(k - c.members.size());
      probe = c.members;
      probe.push_back(e);
      const SetValue with = eval(probe);
      if (with - c.value >= needed) {
        c.members.push_back(e);
        c.value = with;
      }
    }
  }

  QueryResult result;
  bool have = false;
  for (const auto& [exponent, c] : sieves) {
    if (!have || c.value > result.value) {
      have = true;
      result.chosen = c.members;
      result.value = c.value;
    }
  }
  result.oracle_calls = eval.calls();
  result.algorithm = kSieveTag;
  return result;
}

QueryResult SieveOnSummary(const Summary& summary, const ElementSet& removed,
                           std::size_t k, double epsilon,
                           const SubmodularObjective& f) {
  std::vector<ElementId> stream;
  for (ElementId e : summary.InsertionOrder()) {
    if (!removed.Contains(e)) stream.push_back(e);
  }
  QueryResult result = SieveStreaming(stream, k, epsilon, f);
  result.algorithm = kSummarySieveTag;
  return result;
}

QueryResult RandomBaseline(const ElementSet& pool, std::size_t sample_size,
                           std::size_t k, std::uint64_t seed,
                           const SubmodularObjective& f) {
  ElementSet sample = pool;
  if (sample_size < pool.size()) {
    std::mt19937_64 rng(seed);
    std::vector<ElementId> picked;
    picked.reserve(sample_size);
    std::sample(pool.begin(), pool.end(), std::back_inserter(picked),
                sample_size, rng);
    sample = ElementSet(std::move(picked));
  }
  QueryResult result = Greedy(f, sample, k);
  result.algorithm = kRandomTag;
  return result;
}

}  // namespace robust_summary
