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

#include <memory>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

#include "gtest/gtest.h"
#include "test_util.h"

namespace robust_summary {
namespace {

using testing::Id;

// |N(Z) ∪ Z| straight from the edge list.
double ReferenceCoverage(const std::vector<CoverageObjective::Edge>& edges,
                         const std::vector<ElementId>& z) {
  std::set<ElementId> covered(z.begin(), z.end());
  for (const auto& [u, v] : edges) {
    for (ElementId x : z) {
      if (x == u) covered.insert(v);
    }
  }
  return static_cast<double>(covered.size());
}

TEST(MarginalGainTest, ModularWeights) {
  ModularObjective f({{Id(0), 3.0}, {Id(1), 2.0}});
  EXPECT_DOUBLE_EQ(MarginalGain(f, Id(0), {}), 3.0);
}

TEST(MarginalGainTest, ZeroForMember) {
  auto f = testing::Star(5);
  EXPECT_EQ(MarginalGain(*f, Id(0), ElementSet(Ids({0, 3}))), 0.0);
}

TEST(MarginalGainTest, CoverageOfTwoEdges) {
  std::vector<CoverageObjective::Edge> edges{{Id(0), Id(1)}, {Id(0), Id(2)}};
  CoverageObjective f(edges, true);
  EXPECT_DOUBLE_EQ(f.Value(ElementSet(Ids({1}))), 1.0);
  EXPECT_DOUBLE_EQ(MarginalGain(f, Id(0), ElementSet(Ids({1}))), 2.0);
}

TEST(MarginalGainTest, UnknownElementThrows) {
  auto f = testing::Star(2);
  EXPECT_THROW(MarginalGain(*f, Id(77), {}), std::domain_error);
  EXPECT_THROW(f->Value(ElementSet(Ids({77}))), std::domain_error);
}

TEST(CoverageObjectiveTest, Star) {
  auto f = testing::Star(5);
  EXPECT_EQ(f->ground_size(), 6u);
  EXPECT_DOUBLE_EQ(f->Value(ElementSet(Ids({0}))), 6.0);
  EXPECT_DOUBLE_EQ(f->Value(ElementSet(Ids({1}))), 1.0);
  EXPECT_DOUBLE_EQ(f->Value(ElementSet()), 0.0);
  EXPECT_EQ(f->OutDegree(Id(0)), 5u);
}

TEST(CoverageObjectiveTest, DisjointEdges) {
  std::vector<CoverageObjective::Edge> edges{{Id(0), Id(1)}, {Id(2), Id(3)}};
  CoverageObjective f(edges, true);
  EXPECT_DOUBLE_EQ(f.Value(ElementSet(Ids({0, 2}))), 4.0);
}

TEST(CoverageObjectiveTest, UndirectedMirrorsEdges) {
  std::vector<CoverageObjective::Edge> edges{{Id(0), Id(1)}};
  CoverageObjective directed(edges, true);
  CoverageObjective undirected(edges, false);
  EXPECT_DOUBLE_EQ(directed.Value(ElementSet(Ids({1}))), 1.0);
  EXPECT_DOUBLE_EQ(undirected.Value(ElementSet(Ids({1}))), 2.0);
}

TEST(CoverageObjectiveTest, IsolatedNodesJoinGroundSet) {
  std::vector<CoverageObjective::Edge> edges{{Id(0), Id(1)}};
  const std::vector<ElementId> isolated = Ids({7});
  CoverageObjective f(edges, true, isolated);
  EXPECT_TRUE(f.Contains(Id(7)));
  EXPECT_DOUBLE_EQ(f.Value(ElementSet(Ids({7}))), 1.0);
}

TEST(CoverageObjectiveTest, MatchesReferenceOnRandomSets) {
  std::mt19937_64 rng(5);
  std::bernoulli_distribution edge(0.2);
  std::vector<CoverageObjective::Edge> edges;
  for (std::uint32_t u = 0; u < 30; ++u) {
    for (std::uint32_t v = 0; v < 30; ++v) {
      if (u != v && edge(rng)) edges.emplace_back(Id(u), Id(v));
    }
  }
  CoverageObjective f(edges, true);
  std::vector<ElementId> ground(f.GroundSet().begin(), f.GroundSet().end());
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ElementId> z;
    std::sample(ground.begin(), ground.end(), std::back_inserter(z),
                trial % 8, rng);
    EXPECT_DOUBLE_EQ(f.Value(ElementSet(z)), ReferenceCoverage(edges, z));
  }
}

TEST(MovieObjectiveTest, PureModularTerm) {
  MovieObjective f({2.0}, {{Id(1), {1.0}}, {Id(2), {3.0}}}, 0.0);
  EXPECT_DOUBLE_EQ(f.Value(ElementSet(Ids({2}))), 6.0);
}

TEST(MovieObjectiveTest, MixedTerms) {
  MovieObjective f({2.0}, {{Id(1), {1.0}}, {Id(2), {3.0}}}, 0.5);
  // 0.5 * s(u,1) + 0.5 * (s(1,1) + s(2,1)) = 0.5 * 2 + 0.5 * (1 + 3).
  EXPECT_DOUBLE_EQ(f.Value(ElementSet(Ids({1}))), 3.0);
}

TEST(MovieObjectiveTest, EmptySetIsZero) {
  MovieObjective f({2.0}, {{Id(1), {1.0}}, {Id(2), {3.0}}}, 1.0);
  EXPECT_DOUBLE_EQ(f.Value(ElementSet()), 0.0);
}

TEST(MovieObjectiveTest, NegativeSimilaritiesClampToZero) {
  MovieObjective f({1.0}, {{Id(1), {1.0}}, {Id(2), {-2.0}}}, 0.5);
  // User term for 2 clamps to 0; coverage of 1 by 2 clamps to 0.
  EXPECT_DOUBLE_EQ(f.Value(ElementSet(Ids({2}))), 0.5 * 4.0);
  EXPECT_DOUBLE_EQ(f.Value(ElementSet(Ids({1, 2}))), 0.5 * 1.0 + 0.5 * 5.0);
}

TEST(MovieObjectiveTest, RejectsBadInput) {
  EXPECT_THROW(MovieObjective({1.0}, {{Id(1), {1.0, 2.0}}}, 0.5),
               std::domain_error);
  EXPECT_THROW(MovieObjective({1.0}, {{Id(1), {1.0}}}, 1.5),
               std::domain_error);
}

TEST(WeightedSumObjectiveTest, CombinesTerms) {
  auto a = std::shared_ptr<const SubmodularObjective>(testing::Modular({1, 2}));
  auto b = std::shared_ptr<const SubmodularObjective>(testing::Modular({4, 8}));
  WeightedSumObjective f({{0.5, a}, {0.25, b}});
  EXPECT_DOUBLE_EQ(f.Value(ElementSet(Ids({0, 1}))), 0.5 * 3 + 0.25 * 12);
}

TEST(CallCounterTest, CountsEveryEvaluation) {
  auto f = testing::Star(3);
  f->ResetCallCount();
  f->Value(ElementSet(Ids({0})));
  f->Value(ElementSet(Ids({1})));
  MarginalGain(*f, Id(2), ElementSet(Ids({1})));
  EXPECT_EQ(f->call_count(), 4u);
}

TEST(CallCounterTest, ConcurrentEvaluationsAllCounted) {
  auto f = testing::RandomCoverage(20, 0.2, 3);
  f->ResetCallCount();
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&f] {
      for (int i = 0; i < 250; ++i) f->Value(ElementSet(Ids({1, 2, 3})));
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(f->call_count(), 1000u);
}

TEST(PropertyCheckTest, CoverageHasNoViolations) {
  auto f = testing::RandomCoverage(40, 0.1, 11);
  const PropertyReport report = CheckProperties(*f, f->GroundSet(), 1000, 1);
  EXPECT_EQ(report.trials, 1000u);
  EXPECT_EQ(report.total_violations(), 0u);
}

TEST(PropertyCheckTest, ModularHasNoViolations) {
  auto f = testing::RandomModular(30, 2);
  EXPECT_EQ(CheckProperties(*f, f->GroundSet(), 500, 3).total_violations(),
            0u);
}

TEST(PropertyCheckTest, MovieHasNoViolations) {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> x(0.0, 1.0);
  std::vector<std::pair<ElementId, std::vector<double>>> movies;
  for (std::uint32_t i = 0; i < 40; ++i) movies.push_back({Id(i), {x(rng), x(rng), x(rng)}});
  MovieObjective f({x(rng), x(rng), x(rng)}, movies, 0.7);
  EXPECT_EQ(CheckProperties(f, f.GroundSet(), 1000, 5).total_violations(), 0u);
}

TEST(PropertyCheckTest, SupermodularFixtureIsFlagged) {
  FunctionObjective f(ElementSet(testing::Iota(6)),
                      [](std::span<const ElementId> z) {
                        const double n = static_cast<double>(z.size());
                        return n * n;
                      });
  const PropertyReport report = CheckProperties(f, f.GroundSet(), 500, 6);
  EXPECT_GT(report.diminishing_returns_violations, 0u);
  // Counterexample X = {}, Y = {a}: gain 1 at X, 3 at Y.
  EXPECT_LT(MarginalGain(f, Id(1), {}), MarginalGain(f, Id(1), ElementSet(Ids({0}))));
}

// Exhaustive check over all X ⊆ Y ⊆ V, e ∉ Y on small random graphs.
TEST(PropertyCheckTest, CoverageExhaustiveOnSmallGraphs) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto f = testing::RandomCoverage(8, 0.25, 100 + seed);
    const auto ground = testing::Iota(8);
    auto subset = [&](unsigned mask) {
      std::vector<ElementId> s;
      for (unsigned i = 0; i < 8; ++i) {
        if (mask >> i & 1) s.push_back(ground[i]);
      }
      return ElementSet(s);
    };
    int violations = 0;
    for (unsigned y = 0; y < 256; ++y) {
      const ElementSet ys = subset(y);
      // Enumerate submasks x of y.
      for (unsigned x = y;; x = (x - 1) & y) {
        const ElementSet xs = subset(x);
        if (f->Value(xs) > f->Value(ys)) ++violations;
        for (unsigned e = 0; e < 8; ++e) {
          if (y >> e & 1) continue;
          if (MarginalGain(*f, ground[e], xs) <
              MarginalGain(*f, ground[e], ys)) {
            ++violations;
          }
        }
        if (x == 0) break;
      }
    }
    EXPECT_EQ(violations, 0) << "seed " << seed;
  }
}

}  // namespace
}  // namespace robust_summary
