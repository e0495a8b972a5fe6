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
// Submodular objectives
//
// Every algorithm in this library reaches f only through
// SubmodularObjective::Value, which counts its invocations. Objectives are
// immutable after construction and hold no incremental state: callers that
// want to avoid re-evaluation cache values themselves.

#ifndef ROBUST_SUMMARY_OBJECTIVE_H_
#define ROBUST_SUMMARY_OBJECTIVE_H_

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "robust_summary/element.h"

namespace robust_summary {

class SubmodularObjective {
 public:
  virtual ~SubmodularObjective() = default;

  SubmodularObjective() = default;
  SubmodularObjective(const SubmodularObjective&) = delete;
  SubmodularObjective& operator=(const SubmodularObjective&) = delete;

  // f(set). `set` must not contain duplicates. Throws std::domain_error if
  // any id lies outside the ground set.
  SetValue Value(std::span<const ElementId> set) const {
    calls_.fetch_add(1, std::memory_order_relaxed);
    return Evaluate(set);
  }
  SetValue Value(const ElementSet& set) const { return Value(set.ids()); }

  virtual const ElementSet& GroundSet() const = 0;
  std::size_t ground_size() const { return GroundSet().size(); }
  bool Contains(ElementId e) const { return GroundSet().Contains(e); }

  std::uint64_t call_count() const {
    return calls_.load(std::memory_order_relaxed);
  }
  void ResetCallCount() { calls_.store(0, std::memory_order_relaxed); }

 protected:
  virtual SetValue Evaluate(std::span<const ElementId> set) const = 0;

 private:
  mutable std::atomic<std::uint64_t> calls_{0};
};

// f(base ∪ {e}) - f(base). Zero when e is already in base.
SetValue MarginalGain(const SubmodularObjective& f, ElementId e,
                      const ElementSet& base);

// f(Z) = sum of per-element weights.
class ModularObjective : public SubmodularObjective {
 public:
  explicit ModularObjective(std::vector<std::pair<ElementId, double>> weights);

  const ElementSet& GroundSet() const override { return ground_; }
  double weight(ElementId e) const;

 protected:
  SetValue Evaluate(std::span<const ElementId> set) const override;

 private:
  ElementSet ground_;
  std::unordered_map<ElementId, double> weights_;
};

// Dominating-set objective f(Z) = |N(Z) ∪ Z| where N(Z) is the union of the
// out-neighbourhoods of Z.
class CoverageObjective : public SubmodularObjective {
 public:
  using Edge = std::pair<ElementId, ElementId>;

  // Undirected graphs mirror every edge. `isolated` adds nodes that have no
  // incident edges to the ground set.
  CoverageObjective(std::span<const Edge> edges, bool directed,
                    std::span<const ElementId> isolated = {});

  const ElementSet& GroundSet() const override { return ground_; }
  bool directed() const { return directed_; }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t OutDegree(ElementId e) const;

 protected:
  SetValue Evaluate(std::span<const ElementId> set) const override;

 private:
  std::uint32_t DenseIndex(ElementId e) const;

  bool directed_;
  std::size_t edge_count_ = 0;
  ElementSet ground_;
  std::unordered_map<ElementId, std::uint32_t> dense_;
  std::vector<std::vector<std::uint32_t>> out_;
};

// Personalised recommendation objective
//   f_u(Z) = (1 - alpha) * sum_{z in Z} s(u, z)
//          + alpha * sum_{m in M} max_{z in Z} s(m, z)
// with s(a, b) = max(0, <v_a, v_b>) and the max over an empty Z taken as 0.
// M is the full set of movies the objective was built from.
class MovieObjective : public SubmodularObjective {
 public:
  MovieObjective(std::vector<double> user_vec,
                 std::vector<std::pair<ElementId, std::vector<double>>> movies,
                 double alpha);

  const ElementSet& GroundSet() const override { return ground_; }
  double alpha() const { return alpha_; }
  std::size_t dimension() const { return dim_; }

 protected:
  SetValue Evaluate(std::span<const ElementId> set) const override;

 private:
  double Similarity(std::uint32_t a, std::uint32_t b) const;

  double alpha_;
  std::size_t dim_;
  ElementSet ground_;
  std::unordered_map<ElementId, std::uint32_t> dense_;
  std::vector<double> vecs_;          // row-major, one row per movie
  std::vector<double> user_score_;    // clamped <v_u, v_z>
  std::vector<double> sim_;           // clamped pairwise table, may be empty
};

// Non-negative combination of objectives over a common ground set.
class WeightedSumObjective : public SubmodularObjective {
 public:
  WeightedSumObjective(
      std::vector<std::pair<double, std::shared_ptr<const SubmodularObjective>>>
          parts);

  const ElementSet& GroundSet() const override { return ground_; }

 protected:
  SetValue Evaluate(std::span<const ElementId> set) const override;

 private:
  ElementSet ground_;
  std::vector<std::pair<double, std::shared_ptr<const SubmodularObjective>>>
      parts_;
};

// Wraps an arbitrary set function. Used for fixtures that are deliberately
// not submodular.
class FunctionObjective : public SubmodularObjective {
 public:
  using Fn = std::function<SetValue(std::span<const ElementId>)>;
  FunctionObjective(ElementSet ground, Fn fn)
      : ground_(std::move(ground)), fn_(std::move(fn)) {}

  const ElementSet& GroundSet() const override { return ground_; }

 protected:
  SetValue Evaluate(std::span<const ElementId> set) const override;

 private:
  ElementSet ground_;
  Fn fn_;
};

struct PropertyReport {
  std::uint64_t trials = 0;
  std::uint64_t normalization_violations = 0;
  std::uint64_t monotonicity_violations = 0;
  std::uint64_t diminishing_returns_violations = 0;
  std::uint64_t removal_bound_violations = 0;

  std::uint64_t total_violations() const {
    return normalization_violations + monotonicity_violations +
           diminishing_returns_violations + removal_bound_violations;
  }
};

// Samples `trials` random configurations from `universe` and counts
// violations of monotonicity, diminishing returns
//   f(X ∪ {e}) - f(X) >= f(Y ∪ {e}) - f(Y)      for X ⊆ Y, e ∉ Y
// and the removal inequality
//   f(A ∪ B) - f(A ∪ (B \ R)) <= f(A ∪ R) - f(A).
// Comparisons allow a relative slack of `tolerance`.
PropertyReport CheckProperties(const SubmodularObjective& f,
                               const ElementSet& universe,
                               std::uint64_t trials, std::uint64_t seed,
                               double tolerance = 1e-9);

}  // namespace robust_summary

#endif  // ROBUST_SUMMARY_OBJECTIVE_H_
