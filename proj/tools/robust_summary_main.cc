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

// Command-line front end: synthetic data, summary builds, queries,
// exhaustive verification and experiment sweeps.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "robust_summary/exact.h"
#include "robust_summary/experiment.h"
#include "robust_summary/io.h"
#include "robust_summary/query.h"
#include "robust_summary/summary.h"
#include "robust_summary/synthetic.h"
#include "robust_summary/threshold_grid.h"

namespace rs = robust_summary;

namespace {

struct ObjectiveFlags {
  std::string objective = "coverage";
  std::string input;
  bool directed = true;
  std::string user_vector;
  double alpha = 0.9;

  void Register(CLI::App* app) {
    app->add_option("--objective", objective, "coverage or movie")
        ->check(CLI::IsMember({"coverage", "movie"}));
    app->add_option("-i,--input", input,
                    "Edge list (coverage) or feature table (movie)")
        ->required();
    app->add_flag("--directed,!--undirected", directed,
                  "Edge direction for coverage input (default directed)");
    app->add_option("--user-vector", user_vector, "User vector (movie)");
    app->add_option("--alpha", alpha, "Movie objective trade-off in [0,1]");
  }

  std::unique_ptr<rs::SubmodularObjective> Load() const {
    if (objective == "coverage") {
      return rs::MakeCoverageObjective(rs::LoadEdgeList(input, directed));
    }
    if (user_vector.empty()) {
      throw std::invalid_argument("--user-vector is required for movie input");
    }
    return rs::MakeMovieObjective(rs::LoadFeatureTable(input),
                                  rs::LoadVector(user_vector), alpha);
  }
};

std::vector<rs::ElementId> StreamOrder(const rs::SubmodularObjective& f,
                                       std::optional<std::uint64_t> seed) {
  const rs::ElementSet& ground = f.GroundSet();
  std::vector<rs::ElementId> stream(ground.begin(), ground.end());
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::shuffle(stream.begin(), stream.end(), rng);
  }
  return stream;
}

bool IsGridDocument(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string first;
  std::getline(in, first);
  return first.rfind("robust-grid", 0) == 0;
}

void PrintResult(const rs::QueryResult& r) {
  std::cout << "algorithm " << r.algorithm << "\nvalue " << r.value
            << "\noracle_calls " << r.oracle_calls << "\nchosen";
  for (rs::ElementId e : r.chosen) std::cout << ' ' << rs::Index(e);
  std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deletion-robust submodular summaries"};
  app.require_subcommand(1);

  // gen-synthetic
  CLI::App* gen = app.add_subcommand("gen-synthetic", "Write synthetic inputs");
  std::string gen_kind = "graph";
  std::string gen_output;
  std::string gen_user_output;
  rs::PowerLawGraphOptions graph_opts;
  rs::MovieDataOptions movie_opts;
  std::uint64_t gen_seed = 1;
  gen->add_option("--kind", gen_kind, "graph or movies")
      ->check(CLI::IsMember({"graph", "movies"}));
  gen->add_option("-o,--output", gen_output, "Output path")->required();
  gen->add_option("--user-output", gen_user_output,
                  "User vector path (movies)");
  gen->add_option("--nodes", graph_opts.nodes, "Graph nodes");
  gen->add_option("--exponent", graph_opts.exponent, "Out-degree exponent");
  gen->add_option("--max-degree", graph_opts.max_degree, "Out-degree cap");
  gen->add_option("--rows", movie_opts.rows, "Movie rows");
  gen->add_option("--dimension", movie_opts.dimension, "Feature dimension");
  gen->add_option("--drama-fraction", movie_opts.drama_fraction,
                  "Share of rows tagged Drama");
  gen->add_option("--seed", gen_seed, "Random seed");

  // build-summary
  CLI::App* build = app.add_subcommand("build-summary", "Build a summary");
  ObjectiveFlags build_obj;
  build_obj.Register(build);
  std::size_t build_k = 10;
  std::size_t build_m = 0;
  std::optional<std::size_t> build_w;
  std::optional<double> build_tau;
  double build_eps = 0.2;
  std::optional<std::uint64_t> build_seed;
  std::string build_output;
  build->add_option("-k", build_k, "Cardinality")->required();
  build->add_option("-m", build_m, "Removal budget");
  build->add_option("-w", build_w, "Bucket multiplier (default from k, m)");
  build->add_option("--tau", build_tau,
                    "Fixed threshold; omit to build an OPT-free grid");
  build->add_option("--epsilon", build_eps, "Grid spacing");
  build->add_option("--seed", build_seed, "Shuffle the stream with this seed");
  build->add_option("-o,--output", build_output, "Output path")->required();

  // query
  CLI::App* query = app.add_subcommand("query", "Query a saved summary");
  ObjectiveFlags query_obj;
  query_obj.Register(query);
  std::string query_summary;
  std::string query_removed;
  std::size_t query_k = 10;
  std::string query_algo = "greedy";
  double query_eps = 0.2;
  bool query_revalidate = false;
  query->add_option("-s,--summary", query_summary, "Summary or grid document")
      ->required();
  query->add_option("--removed", query_removed, "Removal list");
  query->add_option("-k", query_k, "Cardinality")->required();
  query->add_option("--algorithm", query_algo, "greedy or sieve")
      ->check(CLI::IsMember({"greedy", "sieve"}));
  query->add_option("--epsilon", query_eps, "Sieve spacing");
  query->add_flag("--revalidate", query_revalidate,
                  "Recompute cached bucket values on load");

  // verify
  CLI::App* verify = app.add_subcommand(
      "verify", "Exhaustively check the robustness ratio on a small instance");
  ObjectiveFlags verify_obj;
  verify_obj.Register(verify);
  std::size_t verify_k = 2;
  std::size_t verify_m = 1;
  std::string verify_mode = "single";
  double verify_eps = 0.1;
  std::optional<std::size_t> verify_w;
  std::optional<std::uint64_t> verify_seed;
  verify->add_option("-k", verify_k, "Cardinality")->required();
  verify->add_option("-m", verify_m, "Removal budget")->required();
  verify->add_option("--mode", verify_mode, "single or grid")
      ->check(CLI::IsMember({"single", "grid"}));
  verify->add_option("--epsilon", verify_eps, "Grid spacing");
  verify->add_option("-w", verify_w, "Bucket multiplier (default from k, m)");
  verify->add_option("--seed", verify_seed, "Shuffle the stream");

  // experiment
  CLI::App* experiment =
      app.add_subcommand("experiment", "Run an experiment sweep");
  std::string exp_config;
  std::string exp_output;
  bool exp_means = false;
  experiment->add_option("-c,--config", exp_config, "JSON config")->required();
  experiment->add_option("-o,--output", exp_output,
                         "CSV report path (default stdout)");
  experiment->add_flag("--means", exp_means,
                       "Print mean values per algorithm to stderr");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      if (gen_kind == "graph") {
        graph_opts.seed = gen_seed;
        rs::SaveEdgeList(rs::PowerLawGraph(graph_opts), gen_output);
      } else {
        movie_opts.seed = gen_seed;
        const rs::MovieData data = rs::SyntheticMovies(movie_opts);
        rs::SaveFeatureTable(data.table, gen_output);
        if (!gen_user_output.empty()) rs::SaveVector(data.user, gen_user_output);
      }
    } else if (*build) {
      const auto f = build_obj.Load();
      const auto stream = StreamOrder(*f, build_seed);
      if (build_tau) {
        const std::size_t w =
            build_w.value_or(rs::MinBucketMultiplier(build_k, build_m));
        const rs::Summary s = rs::BuildSummary(stream, build_k, w, *build_tau, *f);
        rs::SaveSummary(s, build_output);
        std::cout << "stored " << s.size() << " of " << stream.size()
                  << " elements, oracle_calls " << s.stats().oracle_calls
                  << '\n';
      } else {
        rs::ThresholdGrid grid(build_k, build_m, build_eps, build_w);
        for (rs::ElementId e : stream) grid.Ingest(e, *f);
        rs::SaveGrid(grid, build_output);
        const rs::GridMemoryReport mem = grid.MemoryReport();
        std::cout << "instances " << mem.live_instances << ", stored "
                  << grid.StoredElements().size() << " distinct ("
                  << mem.total_stored << " total), oracle_calls "
                  << grid.oracle_calls() << '\n';
      }
    } else if (*query) {
      const auto f = query_obj.Load();
      const rs::ElementSet removed =
          query_removed.empty() ? rs::ElementSet{}
                                : rs::LoadRemovalList(query_removed);
      rs::QueryResult r;
      if (IsGridDocument(query_summary)) {
        const rs::ThresholdGrid grid = rs::LoadGrid(query_summary);
        r = query_algo == "greedy"
                ? rs::GridQuery(grid, removed, query_k, *f)
                : rs::GridSieveQuery(grid, removed, query_k, query_eps, *f);
      } else {
        const rs::Summary s = rs::LoadSummary(
            query_summary, query_revalidate ? f.get() : nullptr);
        r = query_algo == "greedy"
                ? rs::GreedyOnSummary(s, removed, query_k, *f)
                : rs::SieveOnSummary(s, removed, query_k, query_eps, *f);
      }
      PrintResult(r);
    } else if (*verify) {
      const auto f = verify_obj.Load();
      const auto stream = StreamOrder(*f, verify_seed);
      rs::VerifyOptions opts;
      opts.mode = verify_mode == "grid" ? rs::ThresholdMode::kGrid
                                        : rs::ThresholdMode::kSingle;
      opts.epsilon = verify_eps;
      opts.w = verify_w;
      opts.instance = verify_obj.input;
      const rs::RobustnessReport report =
          rs::VerifyRobustness(stream, *f, verify_k, verify_m, opts);
      std::cout << rs::RobustnessReportJson(report) << '\n';
      return report.passed() ? 0 : 3;
    } else if (*experiment) {
      std::ifstream in(exp_config);
      if (!in) throw std::runtime_error("cannot open " + exp_config);
      std::stringstream text;
      text << in.rdbuf();
      const rs::ExperimentConfig config = rs::ParseExperimentConfig(text.str());
      const rs::RunReport report = rs::RunExperiment(config);
      if (exp_output.empty()) {
        report.WriteCsv(std::cout);
      } else {
        std::ofstream out(exp_output);
        if (!out) throw std::runtime_error("cannot write " + exp_output);
        report.WriteCsv(out);
      }
      if (exp_means) {
        for (const auto& [key, mean] : report.MeanValues()) {
          const auto& [algorithm, k, strategy] = key;
          std::cerr << algorithm << " k=" << k << ' ' << strategy << ' '
                    << mean << '\n';
        }
      }
    }
  } catch (const rs::GuardError& e) {
    std::cerr << "guard: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
