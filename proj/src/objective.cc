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

#include "robust_summary/objective.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace robust_summary {
namespace {

[[noreturn]] void UnknownElement(ElementId e) {
  throw std::domain_error("element " + std::to_string(Index(e)) +
                          " is not in the ground set");
}

// Dense tables beyond this many movies are computed on the fly instead.
constexpr std::size_t kMaxSimilarityTable = 6000;

}  // namespace

SetValue MarginalGain(const SubmodularObjective& f, ElementId e,
                      const ElementSet& base) {
  if (!f.Contains(e)) UnknownElement(e);
  if (base.Contains(e)) return 0.0;
  ElementSet with = base;
  with.Insert(e);
  return f.Value(with) - f.Value(base);
}

ModularObjective::ModularObjective(
    std::vector<std::pair<ElementId, double>> weights) {
  std::vector<ElementId> ids;
  ids.reserve(weights.size());
  for (const auto& [e, w] : weights) {
    if (!(w >= 0.0)) {
      throw std::invalid_argument("modular weights must be non-negative");
    }
    if (!weights_.emplace(e, w).second) {
      throw std::invalid_argument("duplicate element " +
                                  std::to_string(Index(e)));
    }
    ids.push_back(e);
  }
  ground_ = ElementSet(std::move(ids));
}

double ModularObjective::weight(ElementId e) const {
  auto it = weights_.find(e);
  if (it == weights_.end()) UnknownElement(e);
  return it->second;
}

SetValue ModularObjective::Evaluate(std::span<const ElementId> set) const {
  SetValue total = 0.0;
  for (ElementId e : set) total += weight(e);
  return total;
}

CoverageObjective::CoverageObjective(std::span<const Edge> edges,
                                     bool directed,
                                     std::span<const ElementId> isolated)
    : directed_(directed) {
  std::vector<ElementId> nodes(isolated.begin(), isolated.end());
  for (const auto& [u, v] : edges) {
    nodes.push_back(u);
    nodes.push_back(v);
  }
  ground_ = ElementSet(std::move(nodes));
  dense_.reserve(ground_.size());
  std::uint32_t next = 0;
  for (ElementId e : ground_) dense_.emplace(e, next++);
  out_.resize(ground_.size());
  for (const auto& [u, v] : edges) {
    out_[dense_.at(u)].push_back(dense_.at(v));
    if (!directed_) out_[dense_.at(v)].push_back(dense_.at(u));
  }
  for (auto& adj : out_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    edge_count_ += adj.size();
  }
}

std::uint32_t CoverageObjective::DenseIndex(ElementId e) const {
  auto it = dense_.find(e);
  if (it == dense_.end()) UnknownElement(e);
  return it->second;
}

std::size_t CoverageObjective::OutDegree(ElementId e) const {
  return out_[DenseIndex(e)].size();
}

SetValue CoverageObjective::Evaluate(std::span<const ElementId> set) const {
  // Per-thread visit stamps; a fresh stamp per call avoids clearing.
  thread_local std::vector<std::uint64_t> seen;
  thread_local std::uint64_t stamp = 0;
  if (seen.size() < out_.size()) seen.resize(out_.size(), 0);
  ++stamp;
  std::size_t count = 0;
  auto visit = [&](std::uint32_t u) {
    if (seen[u] != stamp) {
      seen[u] = stamp;
      ++count;
    }
  };
  for (ElementId e : set) {
    const std::uint32_t u = DenseIndex(e);
    visit(u);
    for (std::uint32_t v : out_[u]) visit(v);
  }
  return static_cast<SetValue>(count);
}

MovieObjective::MovieObjective(
    std::vector<double> user_vec,
    std::vector<std::pair<ElementId, std::vector<double>>> movies,
    double alpha)
    : alpha_(alpha), dim_(user_vec.size()) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::domain_error("alpha must lie in [0, 1]");
  }
  std::sort(movies.begin(), movies.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<ElementId> ids;
  ids.reserve(movies.size());
  vecs_.reserve(movies.size() * dim_);
  for (const auto& [id, vec] : movies) {
    if (vec.size() != dim_) {
      throw std::domain_error("movie " + std::to_string(Index(id)) +
                              " has dimension " + std::to_string(vec.size()) +
                              ", expected " + std::to_string(dim_));
    }
    if (!ids.empty() && ids.back() == id) {
      throw std::invalid_argument("duplicate movie " +
                                  std::to_string(Index(id)));
    }
    dense_.emplace(id, static_cast<std::uint32_t>(ids.size()));
    ids.push_back(id);
    vecs_.insert(vecs_.end(), vec.begin(), vec.end());
  }
  ground_ = ElementSet(std::move(ids));

  const std::size_t n = ground_.size();
  user_score_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double dot = 0.0;
    for (std::size_t d = 0; d < dim_; ++d) {
      dot += user_vec[d] * vecs_[i * dim_ + d];
    }
    user_score_[i] = std::max(0.0, dot);
  }
  if (n <= kMaxSimilarityTable) {
    sim_.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        double dot = 0.0;
        for (std::size_t d = 0; d < dim_; ++d) {
          dot += vecs_[i * dim_ + d] * vecs_[j * dim_ + d];
        }
        sim_[i * n + j] = sim_[j * n + i] = std::max(0.0, dot);
      }
    }
  }
}

double MovieObjective::Similarity(std::uint32_t a, std::uint32_t b) const {
  if (!sim_.empty()) return sim_[std::size_t{a} * ground_.size() + b];
  double dot = 0.0;
  for (std::size_t d = 0; d < dim_; ++d) {
    dot += vecs_[a * dim_ + d] * vecs_[b * dim_ + d];
  }
  return std::max(0.0, dot);
}

SetValue MovieObjective::Evaluate(std::span<const ElementId> set) const {
  if (set.empty()) return 0.0;
  const std::size_t n = ground_.size();
  // best[m] = max_z s(m, z), accumulated one contiguous row at a time
  // (the similarity table is symmetric).
  thread_local std::vector<double> best;
  best.assign(n, 0.0);
  double relevance = 0.0;
  for (ElementId e : set) {
    auto it = dense_.find(e);
    if (it == dense_.end()) UnknownElement(e);
    const std::uint32_t z = it->second;
    relevance += user_score_[z];
    if (!sim_.empty()) {
      const double* row = sim_.data() + std::size_t{z} * n;
      for (std::size_t m = 0; m < n; ++m) best[m] = std::max(best[m], row[m]);
    } else {
      for (std::size_t m = 0; m < n; ++m) {
        best[m] = std::max(best[m], Similarity(static_cast<std::uint32_t>(m), z));
      }
    }
  }
  double coverage = 0.0;
  for (std::size_t m = 0; m < n; ++m) coverage += best[m];
  return (1.0 - alpha_) * relevance + alpha_ * coverage;
}

WeightedSumObjective::WeightedSumObjective(
    std::vector<std::pair<double, std::shared_ptr<const SubmodularObjective>>>
        parts)
    : parts_(std::move(parts)) {
  if (parts_.empty()) {
    throw std::invalid_argument("weighted sum needs at least one part");
  }
  ground_ = parts_.front().second->GroundSet();
  for (const auto& [weight, part] : parts_) {
    if (!(weight >= 0.0)) {
      throw std::invalid_argument("mixture weights must be non-negative");
    }
    if (part->GroundSet() != ground_) {
      throw std::invalid_argument("mixture parts must share a ground set");
    }
  }
}

SetValue WeightedSumObjective::Evaluate(std::span<const ElementId> set) const {
  SetValue total = 0.0;
  for (const auto& [weight, part] : parts_) total += weight * part->Value(set);
  return total;
}

SetValue FunctionObjective::Evaluate(std::span<const ElementId> set) const {
  for (ElementId e : set) {
    if (!ground_.Contains(e)) UnknownElement(e);
  }
  return fn_(set);
}

PropertyReport CheckProperties(const SubmodularObjective& f,
                               const ElementSet& universe,
                               std::uint64_t trials, std::uint64_t seed,
                               double tolerance) {
  PropertyReport report;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::vector<ElementId> all(universe.begin(), universe.end());

  auto slack = [tolerance](double a, double b) {
    return tolerance * std::max({1.0, std::abs(a), std::abs(b)});
  };
  auto random_subset = [&](const std::vector<ElementId>& from) {
    const double p = unit(rng);
    std::vector<ElementId> out;
    for (ElementId e : from) {
      if (unit(rng) < p) out.push_back(e);
    }
    return ElementSet(std::move(out));
  };

  if (std::abs(f.Value(ElementSet{})) > tolerance) {
    ++report.normalization_violations;
  }
  if (all.empty()) return report;

  for (std::uint64_t t = 0; t < trials; ++t) {
    ++report.trials;
    // X ⊆ Y ⊆ universe \ {e}.
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    const ElementId e = all[pick(rng)];
    std::vector<ElementId> rest;
    for (ElementId x : all) {
      if (x != e) rest.push_back(x);
    }
    const ElementSet y = random_subset(rest);
    const ElementSet x =
        random_subset(std::vector<ElementId>(y.begin(), y.end()));
    ElementSet xe = x, ye = y;
    xe.Insert(e);
    ye.Insert(e);
    const double fx = f.Value(x), fy = f.Value(y);
    const double fxe = f.Value(xe), fye = f.Value(ye);
    if (fx > fy + slack(fx, fy)) ++report.monotonicity_violations;
    if (fxe - fx < fye - fy - slack(fxe, fye)) {
      ++report.diminishing_returns_violations;
    }

    const ElementSet a = random_subset(all);
    const ElementSet b = random_subset(all);
    const ElementSet r = random_subset(all);
    const double f_ab = f.Value(a.Union(b));
    const double f_ab_minus_r = f.Value(a.Union(b.Difference(r)));
    const double f_ar = f.Value(a.Union(r));
    const double f_a = f.Value(a);
    if (f_ab - f_ab_minus_r > f_ar - f_a + slack(f_ab, f_ar)) {
      ++report.removal_bound_violations;
    }
  }
  return report;
}

}  // namespace robust_summary
