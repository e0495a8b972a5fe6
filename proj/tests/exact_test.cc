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

#include <vector>

#include "gtest/gtest.h"
#include "robust_summary/query.h"
#include "robust_summary/summary.h"
#include "test_util.h"

namespace robust_summary {
namespace {

using testing::Id;

TEST(BruteForceTest, ModularTopTwo) {
  auto f = testing::Modular({3, 2, 1});
  const OptResult r = BruteForceOpt(*f, f->GroundSet(), 2);
  EXPECT_EQ(r.set, ElementSet(Ids({0, 1})));
  EXPECT_DOUBLE_EQ(r.value, 5.0);
}

TEST(BruteForceTest, StarCentre) {
  auto f = testing::Star(5);
  const OptResult r = BruteForceOpt(*f, f->GroundSet(), 1);
  EXPECT_EQ(r.set, ElementSet(Ids({0})));
  EXPECT_DOUBLE_EQ(r.value, 6.0);
}

TEST(BruteForceTest, TwoStars) {
  std::vector<CoverageObjective::Edge> edges{
      {Id(0), Id(1)}, {Id(0), Id(2)}, {Id(3), Id(4)}, {Id(3), Id(5)}};
  CoverageObjective f(edges, true);
  const OptResult r = BruteForceOpt(f, f.GroundSet(), 2);
  EXPECT_EQ(r.set, ElementSet(Ids({0, 3})));
  EXPECT_DOUBLE_EQ(r.value, 6.0);
}

TEST(BruteForceTest, TiesGoToLexicographicallySmallest) {
  auto f = testing::Modular({1, 1, 1, 1});
  EXPECT_EQ(BruteForceOpt(*f, f->GroundSet(), 1).set, ElementSet(Ids({0})));
  EXPECT_EQ(BruteForceOpt(*f, f->GroundSet(), 2).set,
            ElementSet(Ids({0, 1})));
}

TEST(BruteForceTest, MatchesBitmaskEnumeration) {
  for (int seed = 1; seed <= 8; ++seed) {
    auto f = testing::RandomCoverage(11, 0.2, seed);
    for (std::size_t k : {1, 2, 3, 5}) {
      EXPECT_DOUBLE_EQ(BruteForceOpt(*f, f->GroundSet(), k).value,
                       testing::MaskOptimum(*f, testing::Iota(11), k));
    }
  }
}

TEST(BruteForceTest, GuardRefusesLargeUniverse) {
  auto f = testing::RandomModular(26, 1);
  EXPECT_THROW(BruteForceOpt(*f, f->GroundSet(), 2), GuardError);
}

TEST(CountRemovalSetsTest, SumsBinomials) {
  EXPECT_EQ(CountRemovalSets(14, 2), 1u + 14u + 91u);
  EXPECT_EQ(CountRemovalSets(5, 0), 1u);
  EXPECT_EQ(CountRemovalSets(3, 5), 8u);
}

TEST(VerifyTest, NoRemovalRatioHolds) {
  auto f = testing::RandomCoverage(10, 0.2, 3);
  const auto stream = testing::Iota(10);
  const RobustnessReport r = VerifyRobustness(stream, *f, 4, 0);
  EXPECT_EQ(r.cases_checked + r.zero_opt_skipped, 1u);
  EXPECT_TRUE(r.passed());
  EXPECT_GE(r.worst_ratio, GuaranteedRatio(4));
}

TEST(VerifyTest, IdenticalModularElementsAreAllKept) {
  auto f = testing::Modular({2, 2, 2, 2});
  const RobustnessReport r = VerifyRobustness(testing::Iota(4), *f, 4, 0);
  EXPECT_DOUBLE_EQ(r.worst_ratio, 1.0);
}

TEST(VerifyTest, EnumeratesEveryRemovalSet) {
  auto f = testing::RandomCoverage(9, 0.25, 5);
  const RobustnessReport r = VerifyRobustness(testing::Iota(9), *f, 2, 2);
  EXPECT_EQ(r.cases_checked + r.zero_opt_skipped, CountRemovalSets(9, 2));
  EXPECT_EQ(r.w, MinBucketMultiplier(2, 2));
}

TEST(VerifyTest, WorstRatioIsRecomputable) {
  auto f = testing::RandomCoverage(10, 0.2, 6);
  const auto stream = testing::Shuffled(testing::Iota(10), 6);
  const RobustnessReport r = VerifyRobustness(stream, *f, 4, 1);
  ASSERT_GT(r.cases_checked, 0u);
  const ElementSet remaining = ElementSet(stream).Difference(r.worst_removal);
  const double opt = testing::MaskOptimum(
      *f, std::vector<ElementId>(remaining.begin(), remaining.end()), 4);
  const Summary s =
      BuildSummary(stream, 4, r.w, ThresholdFromOptimum(4, opt), *f);
  EXPECT_NEAR(GreedyOnSummary(s, r.worst_removal, 4, *f).value / opt,
              r.worst_ratio, 1e-12);
}

TEST(VerifyTest, RandomCoverageInstancesPass) {
  for (int seed = 1; seed <= 3; ++seed) {
    auto f = testing::RandomCoverage(14, 0.15, seed);
    const auto stream = testing::Shuffled(testing::Iota(14), seed);
    const RobustnessReport r = VerifyRobustness(stream, *f, 4, 2);
    EXPECT_TRUE(r.passed()) << r.worst_ratio;
    EXPECT_GE(r.worst_ratio, 0.0745);
  }
}

TEST(VerifyTest, GridModeUsesDiscountedTarget) {
  auto f = testing::RandomCoverage(12, 0.2, 9);
  VerifyOptions opts;
  opts.mode = ThresholdMode::kGrid;
  opts.epsilon = 0.1;
  const RobustnessReport r =
      VerifyRobustness(testing::Iota(12), *f, 4, 1, opts);
  EXPECT_NEAR(r.c_target, GuaranteedRatio(4) / 1.1, 1e-15);
  EXPECT_TRUE(r.passed()) << r.worst_ratio;
}

TEST(VerifyTest, Guards) {
  auto f = testing::RandomModular(17, 1);
  EXPECT_THROW(VerifyRobustness(testing::Iota(17), *f, 2, 1), GuardError);
  auto g = testing::RandomModular(5, 1);
  EXPECT_THROW(VerifyRobustness(testing::Iota(5), *g, 1, 1),
               std::invalid_argument);
}

}  // namespace
}  // namespace robust_summary
