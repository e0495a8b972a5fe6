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

#include "robust_summary/summary.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace robust_summary {

int CeilLog2(std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("CeilLog2 of zero");
  return x == 1 ? 0 : std::bit_width(x - 1);
}

std::size_t MinBucketMultiplier(std::size_t k, std::size_t m) {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  const std::uint64_t numerator =
      4ull * static_cast<std::uint64_t>(CeilLog2(k)) * m;
  const std::uint64_t w = (numerator + k - 1) / k;
  return std::max<std::size_t>(1, w);
}

double ThresholdFromOptimum(std::size_t k, SetValue opt_value) {
  if (k < 2) {
    throw std::invalid_argument(
        "threshold formula needs k >= 2 (ceil(log2 k) is zero)");
  }
  if (opt_value < 0.0) throw std::invalid_argument("optimum must be >= 0");
  const double greedy = 1.0 - std::exp(-1.0);
  const double third = 1.0 - std::exp(-1.0 / 3.0);
  const double shrink = 1.0 - 1.0 / CeilLog2(k);
  return opt_value / (2.0 + greedy / third * shrink);
}

double GuaranteedRatio(std::size_t k) {
  if (k < 2) throw std::invalid_argument("ratio is undefined for k < 2");
  return 0.149 * (1.0 - 1.0 / CeilLog2(k));
}

std::size_t StructurePlan::MaxCapacity() const {
  std::size_t total = 0;
  for (const auto& p : partitions) total += p.bucket_count * p.capacity;
  return total;
}

std::size_t StructurePlan::SizeBound() const {
  return (static_cast<std::size_t>(CeilLog2(k)) + 5) * w * k;
}

std::size_t StructurePlan::BucketCount() const {
  std::size_t total = 0;
  for (const auto& p : partitions) total += p.bucket_count;
  return total;
}

StructurePlan PlanStructure(std::size_t k, std::size_t w, double tau) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (w < 1) throw std::invalid_argument("w must be at least 1");
  if (!(tau >= 0.0)) throw std::invalid_argument("tau must be >= 0");
  StructurePlan plan{.k = k, .w = w, .tau = tau, .partitions = {}};
  const int last = CeilLog2(k);
  for (int i = 0; i <= last; ++i) {
    const std::size_t size = std::size_t{1} << i;
    const std::size_t capacity = std::min(size, k);
    plan.partitions.push_back(PartitionPlan{
        .bucket_count = w * ((k + size - 1) / size),
        .capacity = capacity,
        .threshold = tau / static_cast<double>(capacity),
    });
  }
  return plan;
}

std::optional<int> PrunedScanFloor(const StructurePlan& plan,
                                   SetValue singleton_value) {
  for (std::size_t i = 0; i < plan.partitions.size(); ++i) {
    if (plan.partitions[i].threshold <= singleton_value) {
      return static_cast<int>(i);
    }
  }
  return std::nullopt;
}

Summary::Summary(StructurePlan plan, BuildOptions options)
    : plan_(std::move(plan)), options_(options) {
  buckets_.reserve(plan_.BucketCount());
  for (std::size_t i = 0; i < plan_.partitions.size(); ++i) {
    offsets_.push_back(buckets_.size());
    const auto& p = plan_.partitions[i];
    for (std::size_t j = 0; j < p.bucket_count; ++j) {
      buckets_.push_back(Bucket{.partition = static_cast<int>(i),
                                .index = static_cast<int>(j),
                                .capacity = p.capacity,
                                .threshold = p.threshold,
                                .members = {},
                                .value = 0.0});
    }
  }
}

Summary Summary::Restore(StructurePlan plan, std::vector<Bucket> buckets,
                         std::vector<ElementId> insertion_order,
                         SummaryStats stats) {
  Summary s(std::move(plan));
  if (buckets.size() != s.buckets_.size()) {
    throw std::invalid_argument("bucket count does not match the plan");
  }
  std::size_t stored = 0;
  for (std::size_t b = 0; b < buckets.size(); ++b) {
    const Bucket& want = s.buckets_[b];
    const Bucket& got = buckets[b];
    if (got.partition != want.partition || got.index != want.index ||
        got.capacity != want.capacity || got.threshold != want.threshold) {
      throw std::invalid_argument("bucket layout does not match the plan");
    }
    if (got.members.size() > got.capacity) {
      throw std::invalid_argument("bucket exceeds its capacity");
    }
    for (ElementId e : got.members) {
      if (!s.stored_.insert(e).second) {
        throw std::invalid_argument("element " + std::to_string(Index(e)) +
                                    " appears in two buckets");
      }
    }
    stored += got.members.size();
  }
  if (insertion_order.size() != stored ||
      !std::all_of(insertion_order.begin(), insertion_order.end(),
                   [&](ElementId e) { return s.stored_.contains(e); })) {
    throw std::invalid_argument("insertion order does not match buckets");
  }
  s.buckets_ = std::move(buckets);
  s.order_ = std::move(insertion_order);
  s.stats_ = stats;
  return s;
}

const Bucket& Summary::bucket(int partition, int index) const {
  if (partition < 0 ||
      static_cast<std::size_t>(partition) >= plan_.partitions.size() ||
      index < 0 ||
      static_cast<std::size_t>(index) >=
          plan_.partitions[partition].bucket_count) {
    throw std::out_of_range("no such bucket");
  }
  return buckets_[Offset(partition) + index];
}

PlacementDecision Summary::Ingest(ElementId e, const SubmodularObjective& f,
                                  std::optional<SetValue> known_singleton) {
  ++stats_.elements_seen;
  if (stored_.contains(e)) {
    return {.outcome = Placement::kRejectedDuplicate};
  }
  int first = 0;
  if (options_.use_scan_floor) {
    if (!known_singleton) {
      ++stats_.oracle_calls;
      const ElementId single[] = {e};
      known_singleton = f.Value(single);
    }
    auto floor = PrunedScanFloor(plan_, *known_singleton);
    if (!floor) return {.outcome = Placement::kRejected};
    first = *floor;
  } else if (!f.Contains(e)) {
    throw std::domain_error("element " + std::to_string(Index(e)) +
                            " is not in the ground set");
  }

  std::vector<ElementId> probe;
  for (std::size_t b = Offset(first); b < buckets_.size(); ++b) {
    Bucket& bucket = buckets_[b];
    if (bucket.full()) continue;
    probe.assign(bucket.members.begin(), bucket.members.end());
    probe.push_back(e);
    ++stats_.oracle_calls;
    const SetValue with = f.Value(probe);
    if (with - bucket.value >= bucket.threshold) {
      bucket.members.push_back(e);
      bucket.value = with;
      if (options_.verify_cached_values) {
        const SetValue fresh = f.Value(bucket.members);
        if (std::abs(fresh - with) >
            1e-9 * std::max({1.0, std::abs(fresh), std::abs(with)})) {
          throw std::logic_error("cached bucket value drifted from f");
        }
      }
      stored_.insert(e);
      order_.push_back(e);
      ++stats_.elements_stored;
      return {.outcome = Placement::kPlaced,
              .partition = bucket.partition,
              .bucket = bucket.index};
    }
  }
  return {.outcome = Placement::kRejected};
}

bool Summary::SameStructure(const Summary& other) const {
  return plan_ == other.plan_ && buckets_ == other.buckets_ &&
         order_ == other.order_;
}

Summary BuildSummary(std::span<const ElementId> stream, std::size_t k,
                     std::size_t w, double tau, const SubmodularObjective& f,
                     BuildOptions options) {
  Summary summary(PlanStructure(k, w, tau), options);
  for (ElementId e : stream) summary.Ingest(e, f);
  return summary;
}

}  // namespace robust_summary
