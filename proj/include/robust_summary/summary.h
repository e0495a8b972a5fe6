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
// Partitioned threshold summary
//
// A summary for cardinality k is split into ceil(log2 k) + 1 partitions.
// Partition i holds w * ceil(k / 2^i) buckets of capacity min(2^i, k); an
// element may join a bucket of partition i only if its marginal gain with
// respect to that bucket is at least tau / min(2^i, k). Each arriving element
// goes to the first bucket (partitions ascending, then buckets ascending) that
// has room and whose threshold it clears, or is dropped.
//
// After any m elements are removed from the summary, running greedy on what
// is left keeps a constant fraction of the optimum of the remaining ground
// set, provided w and tau are chosen as in MinBucketMultiplier and
// ThresholdFromOptimum.

#ifndef ROBUST_SUMMARY_SUMMARY_H_
#define ROBUST_SUMMARY_SUMMARY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "robust_summary/element.h"
#include "robust_summary/objective.h"

namespace robust_summary {

// Exact ceil(log2(x)) for x >= 1.
int CeilLog2(std::uint64_t x);

// max(1, ceil(4 * ceil(log2 k) * m / k)).
std::size_t MinBucketMultiplier(std::size_t k, std::size_t m);

// tau = opt / (2 + (1 - e^-1) / (1 - e^-1/3) * (1 - 1 / ceil(log2 k))).
// Throws std::invalid_argument for k < 2.
double ThresholdFromOptimum(std::size_t k, SetValue opt_value);

// 0.149 * (1 - 1 / ceil(log2 k)), the fraction of the post-removal optimum
// that greedy on the summary is guaranteed to retain. Requires k >= 2.
double GuaranteedRatio(std::size_t k);

struct PartitionPlan {
  std::size_t bucket_count = 0;
  std::size_t capacity = 0;
  double threshold = 0.0;

  friend bool operator==(const PartitionPlan&, const PartitionPlan&) = default;
};

struct StructurePlan {
  std::size_t k = 0;
  std::size_t w = 0;
  double tau = 0.0;
  std::vector<PartitionPlan> partitions;

  // sum_i w * ceil(k / 2^i) * min(2^i, k).
  std::size_t MaxCapacity() const;
  // (ceil(log2 k) + 5) * w * k.
  std::size_t SizeBound() const;
  std::size_t BucketCount() const;

  friend bool operator==(const StructurePlan&, const StructurePlan&) = default;
};

StructurePlan PlanStructure(std::size_t k, std::size_t w, double tau);

struct Bucket {
  int partition = 0;
  int index = 0;
  std::size_t capacity = 0;
  double threshold = 0.0;
  std::vector<ElementId> members;  // insertion order
  SetValue value = 0.0;            // f(members)

  bool full() const { return members.size() >= capacity; }
  friend bool operator==(const Bucket&, const Bucket&) = default;
};

enum class Placement { kPlaced, kRejected, kRejectedDuplicate };

struct PlacementDecision {
  Placement outcome = Placement::kRejected;
  int partition = -1;
  int bucket = -1;

  bool placed() const { return outcome == Placement::kPlaced; }
  friend bool operator==(const PlacementDecision&,
                         const PlacementDecision&) = default;
};

struct SummaryStats {
  std::uint64_t elements_seen = 0;
  std::uint64_t elements_stored = 0;
  std::uint64_t oracle_calls = 0;

  friend bool operator==(const SummaryStats&, const SummaryStats&) = default;
};

struct BuildOptions {
  // Skip partitions whose threshold exceeds f({e}); placements are unchanged
  // because a marginal gain never exceeds the singleton value.
  bool use_scan_floor = true;
  // Re-evaluate f(bucket) from scratch after each insertion and throw
  // std::logic_error if it drifts from the cached value.
  bool verify_cached_values = false;
};

// Smallest partition index whose threshold is <= singleton_value, or nullopt
// if the element clears no threshold at all.
std::optional<int> PrunedScanFloor(const StructurePlan& plan,
                                   SetValue singleton_value);

class Summary {
 public:
  explicit Summary(StructurePlan plan, BuildOptions options = {});

  // Rebuilds a summary from previously recorded state. Validates the bucket
  // layout against `plan` and throws std::invalid_argument on mismatch.
  static Summary Restore(StructurePlan plan, std::vector<Bucket> buckets,
                         std::vector<ElementId> insertion_order,
                         SummaryStats stats);

  // `known_singleton`, when given, must equal f({e}); it saves the oracle
  // call used to find the scan floor.
  PlacementDecision Ingest(ElementId e, const SubmodularObjective& f,
                           std::optional<SetValue> known_singleton = {});

  const StructurePlan& plan() const { return plan_; }
  std::span<const Bucket> buckets() const { return buckets_; }
  const Bucket& bucket(int partition, int index) const;
  const SummaryStats& stats() const { return stats_; }
  const BuildOptions& options() const { return options_; }

  std::size_t size() const { return order_.size(); }
  bool Contains(ElementId e) const { return stored_.contains(e); }
  ElementSet Elements() const { return ElementSet(order_); }
  // Stored elements in the order they were accepted.
  std::span<const ElementId> InsertionOrder() const { return order_; }

  // True when the approximation guarantee is defined (k >= 2).
  bool guarantee_applies() const { return plan_.k >= 2; }

  // Compares plan, bucket contents and insertion order.
  bool SameStructure(const Summary& other) const;

 private:
  std::size_t Offset(int partition) const { return offsets_[partition]; }

  StructurePlan plan_;
  BuildOptions options_;
  std::vector<std::size_t> offsets_;
  std::vector<Bucket> buckets_;
  std::vector<ElementId> order_;
  std::unordered_set<ElementId> stored_;
  SummaryStats stats_;
};

// One pass over `stream`.
Summary BuildSummary(std::span<const ElementId> stream, std::size_t k,
                     std::size_t w, double tau, const SubmodularObjective& f,
                     BuildOptions options = {});

}  // namespace robust_summary

#endif  // ROBUST_SUMMARY_SUMMARY_H_
