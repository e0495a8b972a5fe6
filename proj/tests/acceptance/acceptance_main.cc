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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "robust_summary/exact.h"
#include "robust_summary/experiment.h"
#include "robust_summary/io.h"
#include "robust_summary/objective.h"
#include "robust_summary/query.h"
#include "robust_summary/summary.h"
#include "robust_summary/synthetic.h"
#include "robust_summary/threshold_grid.h"

namespace rs = robust_summary;

namespace {

using rs::ElementId;
using rs::ElementSet;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::vector<ElementId> Iota(std::uint32_t n) {
  std::vector<ElementId> out;
  for (std::uint32_t i = 0; i < n; ++i) out.push_back(ElementId{i});
  return out;
}

std::vector<ElementId> Shuffled(std::vector<ElementId> v, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

std::shared_ptr<rs::CoverageObjective> RandomCoverage(std::uint32_t n,
                                                      double p,
                                                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(p);
  std::vector<rs::CoverageObjective::Edge> edges;
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = 0; v < n; ++v) {
      if (u != v && edge(rng)) edges.emplace_back(ElementId{u}, ElementId{v});
    }
  }
  const auto all = Iota(n);
  return std::make_shared<rs::CoverageObjective>(edges, true, all);
}

std::shared_ptr<rs::ModularObjective> RandomModular(std::uint32_t n,
                                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> weight(0.0, 1.0);
  std::vector<std::pair<ElementId, double>> w;
  for (std::uint32_t i = 0; i < n; ++i) w.emplace_back(ElementId{i}, weight(rng));
  return std::make_shared<rs::ModularObjective>(std::move(w));
}

// Coverage plus a modular term over the same nodes.
std::shared_ptr<rs::SubmodularObjective> RandomMixture(std::uint32_t n,
                                                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> mix(0.2, 0.8);
  const double a = mix(rng);
  return std::make_shared<rs::WeightedSumObjective>(
      std::vector<std::pair<double, std::shared_ptr<const rs::SubmodularObjective>>>{
          {a, RandomCoverage(n, 0.2, seed * 7 + 1)},
          {(1.0 - a) * n, RandomModular(n, seed * 7 + 2)}});
}

std::shared_ptr<rs::MovieObjective> RandomMovies(std::uint32_t n,
                                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> x(0.3, 1.0);
  std::vector<std::pair<ElementId, std::vector<double>>> movies;
  for (std::uint32_t i = 0; i < n; ++i) {
    movies.push_back({ElementId{i}, {x(rng), x(rng), x(rng), x(rng)}});
  }
  return std::make_shared<rs::MovieObjective>(
      std::vector<double>{x(rng), x(rng), x(rng), x(rng)}, movies,
      std::uniform_real_distribution<double>(0.0, 1.0)(rng));
}

// Capacity sum computed directly from the definition.
std::size_t CapacitySum(std::size_t k, std::size_t w) {
  std::size_t total = 0;
  const int parts = rs::CeilLog2(k) + 1;
  for (int i = 0; i < parts; ++i) {
    const std::size_t two_i = std::size_t{1} << i;
    total += w * ((k + two_i - 1) / two_i) * std::min(two_i, k);
  }
  return total;
}

Outcome SizeBound() {
  // Only the builds are timed; instance generation is excluded.
  double secs = 0.0;
  std::size_t configs = 0, violations = 0, largest = 0;
  std::uint64_t seed = 1;
  for (std::size_t k : {2, 4, 7, 8, 16, 33, 64}) {
    for (std::size_t w : {1, 2, 8}) {
      const auto n = static_cast<std::uint32_t>(10 * w * k);
      const std::size_t sum = CapacitySum(k, w);
      const std::size_t bound = (rs::CeilLog2(k) + 5) * w * k;
      // A modular stream that clears most thresholds, and a coverage stream.
      auto modular = RandomModular(n, seed++);
      auto coverage = RandomCoverage(n, 4.0 / n, seed++);
      for (const rs::SubmodularObjective* f :
           {static_cast<const rs::SubmodularObjective*>(modular.get()),
            static_cast<const rs::SubmodularObjective*>(coverage.get())}) {
        const double tau = f == modular.get() ? 0.25 : 2.0;
        const auto stream = Shuffled(Iota(n), seed++);
        const auto start = std::chrono::steady_clock::now();
        const rs::Summary s = rs::BuildSummary(stream, k, w, tau, *f);
        secs += std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
        ++configs;
        largest = std::max(largest, s.size());
        if (s.size() > sum || sum > bound ||
            s.plan().MaxCapacity() != sum) {
          ++violations;
        }
      }
    }
  }
  std::ostringstream d;
  d << configs << " builds, " << violations << " violations, largest |S| "
    << largest << ", build time " << secs << " s";
  return {violations == 0 && secs < 1.0, d.str()};
}

struct VerifyInstance {
  std::shared_ptr<rs::SubmodularObjective> f;
  std::vector<ElementId> stream;
  std::size_t k;
  std::size_t m;
  std::string name;
};

std::vector<VerifyInstance> VerifyInstances() {
  std::vector<VerifyInstance> out;
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 50; ++i) {
    const auto n = static_cast<std::uint32_t>(
        std::uniform_int_distribution<int>(10, 14)(rng));
    VerifyInstance inst;
    inst.k = i % 2 == 0 ? 4 : 2;
    inst.m = (i / 2) % 2 == 0 ? 2 : 1;
    const std::uint64_t seed = 5000 + i;
    if (i % 4 < 2) {
      inst.f = RandomCoverage(n, 0.1 + 0.1 * (i % 3), seed);
      inst.name = "coverage-" + std::to_string(i);
    } else {
      inst.f = RandomMixture(n, seed);
      inst.name = "mixture-" + std::to_string(i);
    }
    inst.stream = Shuffled(Iota(n), seed);
    out.push_back(std::move(inst));
  }
  return out;
}

Outcome Robustness(rs::ThresholdMode mode, double time_limit_s) {
  const auto start = std::chrono::steady_clock::now();
  int failures = 0;
  std::uint64_t cases = 0;
  double worst_k4 = INFINITY, worst_margin = INFINITY;
  std::string worst_name;
  for (const VerifyInstance& inst : VerifyInstances()) {
    rs::VerifyOptions opts;
    opts.mode = mode;
    opts.epsilon = 0.1;
    opts.instance = inst.name;
    const rs::RobustnessReport r =
        rs::VerifyRobustness(inst.stream, *inst.f, inst.k, inst.m, opts);
    // Recheck the report's targets independently of the library.
    double c = 0.149 * (1.0 - 1.0 / rs::CeilLog2(inst.k));
    if (mode == rs::ThresholdMode::kGrid) c /= 1.1;
    if (!(r.worst_ratio >= c) || r.cases_checked + r.zero_opt_skipped !=
                                     rs::CountRemovalSets(r.n, inst.m)) {
      ++failures;
    }
    cases += r.cases_checked;
    if (inst.k == 4) worst_k4 = std::min(worst_k4, r.worst_ratio);
    if (r.worst_ratio - c < worst_margin) {
      worst_margin = r.worst_ratio - c;
      worst_name = inst.name;
    }
  }
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  std::ostringstream d;
  d << "50 instances, " << cases << " removal sets, " << failures
    << " failures, worst k=4 ratio " << worst_k4 << ", tightest "
    << worst_name << ", " << secs << " s";
  return {failures == 0 && secs < time_limit_s, d.str()};
}

Outcome BaselineRatios() {
  const double eps = 0.1;
  int greedy_bad = 0, sieve_bad = 0;
  double worst_greedy = INFINITY, worst_sieve = INFINITY;
  std::mt19937_64 rng(77);
  for (int i = 0; i < 100; ++i) {
    const auto n = static_cast<std::uint32_t>(
        std::uniform_int_distribution<int>(8, 14)(rng));
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    std::shared_ptr<rs::SubmodularObjective> f;
    switch (i % 4) {
      case 0: f = RandomCoverage(n, 0.2, 900 + i); break;
      case 1: f = RandomModular(n, 900 + i); break;
      case 2: f = RandomMixture(n, 900 + i); break;
      default: f = RandomMovies(n, 900 + i); break;
    }
    const double opt = rs::BruteForceOpt(*f, f->GroundSet(), k).value;
    if (opt <= 0.0) continue;
    const double g = rs::Greedy(*f, f->GroundSet(), k).value;
    const double s =
        rs::SieveStreaming(Shuffled(Iota(n), 900 + i), k, eps, *f).value;
    const double tol = 1e-9 * opt;
    if (g < (1.0 - std::exp(-1.0)) * opt - tol) ++greedy_bad;
    if (s < (0.5 - eps) * opt - tol) ++sieve_bad;
    worst_greedy = std::min(worst_greedy, g / opt);
    worst_sieve = std::min(worst_sieve, s / opt);
  }
  std::ostringstream d;
  d << "greedy violations " << greedy_bad << " (worst " << worst_greedy
    << "), sieve violations " << sieve_bad << " (worst " << worst_sieve << ")";
  return {greedy_bad == 0 && sieve_bad == 0, d.str()};
}

Outcome Invariants() {
  std::uint64_t checks = 0, violations = 0, property_trials = 0;
  auto expect = [&](bool ok) {
    ++checks;
    if (!ok) ++violations;
  };
  for (int seed = 1; seed <= 24; ++seed) {
    std::shared_ptr<rs::SubmodularObjective> f;
    switch (seed % 3) {
      case 0: f = RandomCoverage(90, 0.05, seed); break;
      case 1: f = RandomMixture(90, seed); break;
      default: f = RandomMovies(90, seed); break;
    }
    const std::size_t k = 2 + seed % 11;
    const std::size_t w = 1 + seed % 3;
    const double opt_guess = rs::Greedy(*f, f->GroundSet(), k).value;
    const double tau = rs::ThresholdFromOptimum(k, opt_guess) *
                       (0.5 + 0.25 * (seed % 4));
    const auto stream = Shuffled(Iota(90), seed);

    rs::Summary s(rs::PlanStructure(k, w, tau));
    for (ElementId e : stream) {
      const rs::Summary before = s;
      const rs::PlacementDecision d = s.Ingest(e, *f);
      if (d.placed()) continue;
      // Rejection soundness against the pre-arrival buckets.
      for (const rs::Bucket& b : before.buckets()) {
        if (b.full()) continue;
        expect(rs::MarginalGain(*f, e, ElementSet(b.members)) < b.threshold);
      }
    }
    std::vector<ElementId> all;
    std::size_t total = 0;
    for (const rs::Bucket& b : s.buckets()) {
      const std::size_t cap =
          std::min<std::size_t>(std::size_t{1} << b.partition, k);
      const double fb = f->Value(ElementSet(b.members));
      expect(b.members.size() <= cap);
      expect(std::abs(fb - b.value) <= 1e-9 * std::max(1.0, fb));
      expect(fb >= b.members.size() * tau / cap - 1e-9 * std::max(1.0, fb));
      if (b.members.size() == cap) expect(fb >= tau - 1e-9 * std::max(1.0, fb));
      all.insert(all.end(), b.members.begin(), b.members.end());
      total += b.members.size();
    }
    expect(ElementSet(all).size() == total && total == s.size());

    const rs::Summary full = rs::BuildSummary(stream, k, w, tau, *f,
                                              {.use_scan_floor = false});
    expect(full.SameStructure(s));

    const rs::PropertyReport props =
        rs::CheckProperties(*f, f->GroundSet(), 500, seed);
    property_trials += props.trials;
    violations += props.total_violations();
  }
  std::ostringstream d;
  d << checks << " structural checks, " << property_trials
    << " sampled property triples, " << violations << " violations";
  return {violations == 0 && property_trials >= 10000, d.str()};
}

double MeanOf(const rs::RunReport& report, const std::string& algorithm,
              std::size_t k, const std::string& strategy) {
  return report.MeanValues().at({algorithm, k, strategy});
}

Outcome GraphAnalogue() {
  const auto start = std::chrono::steady_clock::now();
  rs::ExperimentConfig config = rs::ParseExperimentConfig(R"({
    "objective": "coverage",
    "graph": {"nodes": 2000, "seed": 11},
    "ks": [10, 20, 30, 40, 50],
    "w": 1,
    "epsilon": 0.2,
    "tau_mode": "grid",
    "strategies": ["random-from-S:k", "greedy-from-S:2k"],
    "trials": 100,
    "seed": 2017,
    "record_timing": false
  })");
  const rs::RunReport report = rs::RunExperiment(config);
  bool pass = true;
  std::ostringstream d;
  double worst_random = INFINITY, worst_greedy_removal = INFINITY;
  for (std::size_t k : config.ks) {
    const double star = MeanOf(report, rs::kSummaryGreedyTag, k, "random-from-S:k");
    const double sieve = MeanOf(report, rs::kSieveTag, k, "random-from-S:k");
    const double star_sieve =
        MeanOf(report, rs::kSummarySieveTag, k, "random-from-S:k");
    const double random = MeanOf(report, rs::kRandomTag, k, "random-from-S:k");
    worst_random = std::min(worst_random, star / sieve);
    if (!(star >= 0.9 * sieve) || !(random < star) || !(random < sieve)) {
      pass = false;
      d << "[k=" << k << " star " << star << " sieve " << sieve << " random "
        << random << " star-sieve " << star_sieve << "] ";
    }
    const double star2 = MeanOf(report, rs::kSummaryGreedyTag, k, "greedy-from-S:2k");
    const double sieve2 = MeanOf(report, rs::kSieveTag, k, "greedy-from-S:2k");
    worst_greedy_removal = std::min(worst_greedy_removal, star2 / sieve2);
    if (!(star2 >= 0.85 * sieve2)) {
      pass = false;
      d << "[k=" << k << " greedy removal star " << star2 << " sieve "
        << sieve2 << "] ";
    }
  }
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  d << "min STAR-T-Greedy/Sieve ratio: random removal " << worst_random
    << ", greedy removal " << worst_greedy_removal << "; " << secs << " s";
  return {pass && secs < 600.0, d.str()};
}

Outcome MovieAnalogue() {
  const auto start = std::chrono::steady_clock::now();
  constexpr int kReplicates = 3;
  const std::vector<std::size_t> ks{5, 10, 20};
  const std::vector<std::string> strategies{"popularity-weighted:500",
                                            "predicate:Drama"};
  // (alpha, strategy, k) -> sums over replicates.
  std::map<std::tuple<double, std::string, std::size_t>,
           std::pair<double, double>>
      sums;
  double worst_single = INFINITY;
  for (double alpha : {0.9, 0.95}) {
    for (int r = 0; r < kReplicates; ++r) {
      rs::ExperimentConfig config = rs::ParseExperimentConfig(R"({
        "objective": "movie",
        "movies": {"rows": 3900, "dimension": 30},
        "ks": [5, 10, 20],
        "w": 1,
        "epsilon": 0.2,
        "strategies": ["popularity-weighted:500", "predicate:Drama"],
        "trials": 5,
        "record_timing": false
      })");
      config.alpha = alpha;
      config.movies.seed = 100 + r;
      config.seed = 200 + r;
      const rs::RunReport report = rs::RunExperiment(config);
      for (const auto& strategy : strategies) {
        for (std::size_t k : ks) {
          const double star = MeanOf(report, rs::kSummaryGreedyTag, k, strategy);
          const double greedy = MeanOf(report, rs::kGreedyTag, k, strategy);
          auto& [s, g] = sums[{alpha, strategy, k}];
          s += star;
          g += greedy;
          worst_single = std::min(worst_single, star / greedy);
        }
      }
    }
  }
  bool pass = true;
  double worst = INFINITY;
  std::ostringstream d;
  for (const auto& [key, acc] : sums) {
    const double ratio = acc.first / acc.second;
    worst = std::min(worst, ratio);
    if (!(ratio >= 0.9)) {
      pass = false;
      const auto& [alpha, strategy, k] = key;
      d << "[alpha=" << alpha << " " << strategy << " k=" << k << " ratio "
        << ratio << "] ";
    }
  }
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  d << sums.size() << " cells over " << kReplicates
    << " replicates, min STAR-T-Greedy/Greedy " << worst
    << " (single replicate min " << worst_single << "); " << secs << " s";
  return {pass, d.str()};
}

Outcome DeterminismAndPersistence() {
  int failures = 0;
  std::ostringstream d;
  for (const char* text : {
           R"({"graph": {"nodes": 500, "seed": 5}, "ks": [10, 20],
               "strategies": ["random-from-S:k", "greedy-from-S:2k"],
               "trials": 5, "seed": 8})",
           R"({"objective": "movie", "movies": {"rows": 400, "seed": 6},
               "ks": [5], "strategies": ["popularity-weighted:50",
               "predicate:Drama"], "trials": 3, "seed": 8})",
       }) {
    const rs::ExperimentConfig config = rs::ParseExperimentConfig(text);
    if (!rs::RunExperiment(config).SameResults(rs::RunExperiment(config))) {
      ++failures;
      d << "[report differs] ";
    }
  }

  const auto dir = std::filesystem::temp_directory_path() /
                   ("robust_summary_acceptance_" +
                    std::to_string(std::random_device{}()));
  std::filesystem::create_directories(dir);
  int round_trips = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto f = RandomCoverage(400, 0.01, seed);
    const auto stream = Shuffled(Iota(400), seed);
    const std::size_t k = 4 + seed;
    std::vector<ElementId> drop = Shuffled(Iota(400), seed + 99);
    drop.resize(2 * k);
    const ElementSet e(drop);

    const rs::Summary s = rs::BuildSummary(stream, k, 2, 8.0, *f);
    rs::SaveSummary(s, dir / "summary.txt");
    const rs::Summary loaded = rs::LoadSummary(dir / "summary.txt", f.get());
    for (const ElementSet& r : {ElementSet(), e}) {
      const rs::QueryResult a = rs::GreedyOnSummary(s, r, k, *f);
      const rs::QueryResult b = rs::GreedyOnSummary(loaded, r, k, *f);
      if (!(a.chosen == b.chosen && a.value == b.value &&
            loaded.SameStructure(s))) {
        ++failures;
        d << "[summary seed " << seed << "] ";
      }
      ++round_trips;
    }

    rs::ThresholdGrid grid(k, 2 * k, 0.2, 1);
    for (ElementId x : stream) grid.Ingest(x, *f);
    rs::SaveGrid(grid, dir / "grid.txt");
    const rs::ThresholdGrid back = rs::LoadGrid(dir / "grid.txt");
    for (const ElementSet& r : {ElementSet(), e}) {
      const rs::QueryResult a = rs::GridQuery(grid, r, k, *f);
      const rs::QueryResult b = rs::GridQuery(back, r, k, *f);
      const rs::QueryResult c = rs::GridSieveQuery(grid, r, k, 0.2, *f);
      const rs::QueryResult c2 = rs::GridSieveQuery(back, r, k, 0.2, *f);
      if (!(a.chosen == b.chosen && a.value == b.value &&
            c.chosen == c2.chosen && c.value == c2.value)) {
        ++failures;
        d << "[grid seed " << seed << "] ";
      }
      ++round_trips;
    }
  }
  std::filesystem::remove_all(dir);
  d << "2 configs rerun, " << round_trips << " save/load/query round trips, "
    << failures << " mismatches";
  return {failures == 0, d.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "size bound", SizeBound},
      {2, "robustness, fixed threshold",
       [] { return Robustness(rs::ThresholdMode::kSingle, 300.0); }},
      {3, "robustness, threshold grid",
       [] { return Robustness(rs::ThresholdMode::kGrid, 300.0); }},
      {4, "baseline ratios", BaselineRatios},
      {5, "invariant suite", Invariants},
      {6, "graph coverage analogue", GraphAnalogue},
      {7, "movie recommendation analogue", MovieAnalogue},
      {8, "determinism and persistence", DeterminismAndPersistence},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    if (!out.pass) ++failed;
    std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << c.id << " ("
              << c.name << "): " << out.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
