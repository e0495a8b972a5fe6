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

#include "robust_summary/experiment.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "json.hpp"
#include "robust_summary/query.h"
#include "robust_summary/summary.h"
#include "robust_summary/threshold_grid.h"

namespace robust_summary {
namespace {

using nlohmann::json;

[[noreturn]] void BadConfig(const std::string& what) {
  throw std::invalid_argument("invalid experiment config: " + what);
}

void RejectUnknownKeys(const json& obj, const std::set<std::string>& known,
                       const std::string& where) {
  if (!obj.is_object()) BadConfig(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    if (!known.contains(key)) BadConfig("unknown key '" + where + key + "'");
  }
}

template <typename T>
void Read(const json& obj, const char* key, T& out) {
  if (!obj.contains(key)) return;
  try {
    out = obj.at(key).get<T>();
  } catch (const json::exception& e) {
    BadConfig(std::string("key '") + key + "': " + e.what());
  }
}

SizeSpec ReadSize(const json& value) {
  if (value.is_number_unsigned()) return SizeSpec{value.get<std::size_t>(), 0};
  if (value.is_string()) return SizeSpec::Parse(value.get<std::string>());
  BadConfig("sizes must be a count or a string like \"2k\"");
}

StrategyConfig ReadStrategy(const json& value) {
  StrategyConfig s;
  if (value.is_string()) {
    // "name" or "name:size" or "predicate:Genre".
    const auto text = value.get<std::string>();
    const auto colon = text.find(':');
    s.strategy = ParseStrategy(text.substr(0, colon));
    if (colon != std::string::npos) {
      const auto arg = text.substr(colon + 1);
      if (s.strategy == RemovalStrategy::kPredicate) {
        s.keep_genre = arg;
      } else {
        s.size = SizeSpec::Parse(arg);
      }
    }
  } else {
    RejectUnknownKeys(value, {"strategy", "size", "keep_genre"}, "strategies.");
    if (!value.contains("strategy")) BadConfig("strategy entry lacks a name");
    s.strategy = ParseStrategy(value.at("strategy").get<std::string>());
    if (value.contains("size")) s.size = ReadSize(value.at("size"));
    Read(value, "keep_genre", s.keep_genre);
  }
  if (s.strategy == RemovalStrategy::kPredicate && s.keep_genre.empty()) {
    BadConfig("predicate strategy needs a genre to keep");
  }
  return s;
}

double MillisSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

// The summary structure an experiment queries: either one fixed-threshold
// summary or an OPT-free grid.
class BuiltSummary {
 public:
  BuiltSummary(const ExperimentConfig& config, std::size_t k, std::size_t m,
               std::span<const ElementId> stream,
               const SubmodularObjective& f) {
    if (config.tau_mode == "grid") {
      grid_.emplace(k, m, config.epsilon, config.w);
      for (ElementId e : stream) grid_->Ingest(e, f);
      elements_ = grid_->StoredElements();
    } else {
      single_.emplace(BuildSummary(stream, k, config.w, config.tau, f));
      elements_ = single_->Elements();
    }
  }

  const ElementSet& elements() const { return elements_; }

  QueryResult Greedy(const ElementSet& removed, std::size_t k,
                     const SubmodularObjective& f) const {
    return grid_ ? GridQuery(*grid_, removed, k, f)
                 : GreedyOnSummary(*single_, removed, k, f);
  }
  QueryResult Sieve(const ElementSet& removed, std::size_t k, double epsilon,
                    const SubmodularObjective& f) const {
    return grid_ ? GridSieveQuery(*grid_, removed, k, epsilon, f)
                 : SieveOnSummary(*single_, removed, k, epsilon, f);
  }

 private:
  std::optional<ThresholdGrid> grid_;
  std::optional<Summary> single_;
  ElementSet elements_;
};

}  // namespace

std::string SizeSpec::ToString() const {
  std::string out;
  if (per_k == 1) {
    out = "k";
  } else if (per_k > 1) {
    out = std::to_string(per_k) + "k";
  }
  if (absolute > 0 || out.empty()) {
    if (!out.empty()) out += "+";
    out += std::to_string(absolute);
  }
  return out;
}

SizeSpec SizeSpec::Parse(const std::string& text) {
  SizeSpec spec;
  std::string_view rest(text);
  auto take_number = [&](std::size_t& out) {
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), out);
    if (ec != std::errc()) return false;
    rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
    return true;
  };
  while (!rest.empty()) {
    std::size_t n = 1;
    const bool had_number = take_number(n);
    if (!rest.empty() && rest.front() == 'k') {
      spec.per_k += n;
      rest.remove_prefix(1);
    } else if (had_number) {
      spec.absolute += n;
    } else {
      BadConfig("cannot parse size '" + text + "'");
    }
    if (!rest.empty()) {
      if (rest.front() != '+') BadConfig("cannot parse size '" + text + "'");
      rest.remove_prefix(1);
    }
  }
  if (text.empty()) BadConfig("empty size");
  return spec;
}

std::string StrategyConfig::Label() const {
  std::string label(StrategyName(strategy));
  if (strategy == RemovalStrategy::kPredicate) return label + ":" + keep_genre;
  return label + ":" + size.ToString();
}

ExperimentConfig ParseExperimentConfig(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    BadConfig(std::string("not valid JSON: ") + e.what());
  }
  RejectUnknownKeys(
      j,
      {"objective", "edge_list", "directed", "graph", "feature_table",
       "user_vector", "movies", "alpha", "ks", "m", "w", "epsilon",
       "tau_mode", "tau", "strategies", "trials", "seed", "greedy_limit",
       "shuffle_stream", "record_timing"},
      "");
  ExperimentConfig c;
  Read(j, "objective", c.objective);
  Read(j, "edge_list", c.edge_list);
  Read(j, "directed", c.directed);
  if (j.contains("graph")) {
    const json& g = j.at("graph");
    RejectUnknownKeys(g, {"nodes", "exponent", "min_degree", "max_degree", "seed"},
                      "graph.");
    Read(g, "nodes", c.graph.nodes);
    Read(g, "exponent", c.graph.exponent);
    Read(g, "min_degree", c.graph.min_degree);
    Read(g, "max_degree", c.graph.max_degree);
    Read(g, "seed", c.graph.seed);
  }
  Read(j, "feature_table", c.feature_table);
  Read(j, "user_vector", c.user_vector);
  if (j.contains("movies")) {
    const json& mv = j.at("movies");
    RejectUnknownKeys(mv, {"rows", "dimension", "clusters", "drama_fraction",
                                 "mean_rating", "seed"},
                      "movies.");
    Read(mv, "rows", c.movies.rows);
    Read(mv, "dimension", c.movies.dimension);
    Read(mv, "clusters", c.movies.clusters);
    Read(mv, "drama_fraction", c.movies.drama_fraction);
    Read(mv, "mean_rating", c.movies.mean_rating);
    Read(mv, "seed", c.movies.seed);
  }
  Read(j, "alpha", c.alpha);
  Read(j, "ks", c.ks);
  if (j.contains("m")) c.m = ReadSize(j.at("m"));
  Read(j, "w", c.w);
  Read(j, "epsilon", c.epsilon);
  Read(j, "tau_mode", c.tau_mode);
  Read(j, "tau", c.tau);
  if (j.contains("strategies")) {
    if (!j.at("strategies").is_array()) BadConfig("strategies must be a list");
    c.strategies.clear();
    for (const auto& s : j.at("strategies")) c.strategies.push_back(ReadStrategy(s));
  }
  Read(j, "trials", c.trials);
  Read(j, "seed", c.seed);
  Read(j, "greedy_limit", c.greedy_limit);
  Read(j, "shuffle_stream", c.shuffle_stream);
  Read(j, "record_timing", c.record_timing);

  if (c.objective != "coverage" && c.objective != "movie") {
    BadConfig("objective must be 'coverage' or 'movie'");
  }
  if (c.tau_mode != "grid" && c.tau_mode != "single") {
    BadConfig("tau_mode must be 'grid' or 'single'");
  }
  if (c.ks.empty()) BadConfig("ks must not be empty");
  for (std::size_t k : c.ks) {
    if (k < (c.tau_mode == "grid" ? 2u : 1u)) BadConfig("k too small");
  }
  if (c.w < 1) BadConfig("w must be at least 1");
  if (!(c.epsilon > 0.0 && c.epsilon < 1.0)) BadConfig("epsilon must be in (0,1)");
  if (!(c.alpha >= 0.0 && c.alpha <= 1.0)) BadConfig("alpha must be in [0,1]");
  if (c.tau < 0.0) BadConfig("tau must be >= 0");
  if (c.trials < 1) BadConfig("trials must be at least 1");
  for (const auto& s : c.strategies) {
    if ((s.strategy == RemovalStrategy::kPopularityWeighted ||
         s.strategy == RemovalStrategy::kPredicate) &&
        c.objective != "movie") {
      BadConfig(s.Label() + " needs the movie objective's feature table");
    }
  }
  return c;
}

ExperimentData LoadExperimentData(const ExperimentConfig& config) {
  ExperimentData data;
  if (config.objective == "coverage") {
    const EdgeListDocument doc =
        config.edge_list.empty() ? PowerLawGraph(config.graph)
                                 : LoadEdgeList(config.edge_list, config.directed);
    data.objective = MakeCoverageObjective(doc);
  } else {
    std::vector<double> user;
    if (config.feature_table.empty()) {
      MovieData synthetic = SyntheticMovies(config.movies);
      data.table = std::move(synthetic.table);
      user = std::move(synthetic.user);
    } else {
      data.table = LoadFeatureTable(config.feature_table);
      if (config.user_vector.empty()) {
        throw std::invalid_argument("a feature table needs a user vector");
      }
      user = LoadVector(config.user_vector);
    }
    data.objective = MakeMovieObjective(*data.table, std::move(user), config.alpha);
  }
  return data;
}

void RunReport::WriteCsv(std::ostream& out) const {
  out << "algorithm,k,m,w,strategy,trial,value,removed,summary_size,"
         "oracle_calls,wall_ms,chosen\n";
  for (const auto& r : rows) {
    char value[64];
    auto end = std::to_chars(value, value + sizeof(value), r.value).ptr;
    out << r.algorithm << ',' << r.k << ',' << r.m << ',' << r.w << ','
        << r.strategy << ',' << r.trial << ',' << std::string_view(value, end - value)
        << ',' << r.removed << ',' << r.summary_size << ',' << r.oracle_calls
        << ',' << r.wall_ms << ',';
    for (std::size_t i = 0; i < r.chosen.size(); ++i) {
      if (i) out << ' ';
      out << Index(r.chosen[i]);
    }
    out << '\n';
  }
}

bool RunReport::SameResults(const RunReport& other) const {
  if (rows.size() != other.rows.size()) return false;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const RunRow& a = rows[i];
    const RunRow& b = other.rows[i];
    if (std::tie(a.algorithm, a.k, a.m, a.w, a.strategy, a.trial, a.value,
                 a.removed, a.summary_size, a.oracle_calls, a.chosen) !=
        std::tie(b.algorithm, b.k, b.m, b.w, b.strategy, b.trial, b.value,
                 b.removed, b.summary_size, b.oracle_calls, b.chosen)) {
      return false;
    }
  }
  return true;
}

std::map<std::tuple<std::string, std::size_t, std::string>, double>
RunReport::MeanValues() const {
  std::map<std::tuple<std::string, std::size_t, std::string>,
           std::pair<double, std::size_t>>
      sums;
  for (const auto& r : rows) {
    auto& [sum, count] = sums[{r.algorithm, r.k, r.strategy}];
    sum += r.value;
    ++count;
  }
  std::map<std::tuple<std::string, std::size_t, std::string>, double> out;
  for (const auto& [key, acc] : sums) out[key] = acc.first / acc.second;
  return out;
}

RunReport RunExperiment(const ExperimentConfig& config,
                        const ExperimentData& data) {
  const SubmodularObjective& f = *data.objective;
  const ElementSet& ground = f.GroundSet();
  RunReport report;

  std::unordered_map<ElementId, double> popularity;
  std::unordered_map<ElementId, const FeatureRow*> rows_by_id;
  if (data.table) {
    for (const auto& row : data.table->rows) {
      popularity[row.id] = row.popularity;
      rows_by_id[row.id] = &row;
    }
  }

  std::vector<ElementId> stream(ground.begin(), ground.end());
  if (config.shuffle_stream) {
    std::mt19937_64 rng(MixSeed(config.seed, 0x5eed));
    std::shuffle(stream.begin(), stream.end(), rng);
  }

  for (std::size_t k : config.ks) {
    const std::size_t m = config.m.Resolve(k);
    const BuiltSummary summary(config, k, m, stream, f);
    const ElementSet& s = summary.elements();

    for (std::size_t si = 0; si < config.strategies.size(); ++si) {
      const StrategyConfig& strategy = config.strategies[si];
      const bool deterministic =
          strategy.strategy == RemovalStrategy::kGreedyFromSummary ||
          strategy.strategy == RemovalStrategy::kPredicate;
      std::vector<RunRow> first_trial;
      ElementSet fixed_removal;

      for (std::size_t trial = 0; trial < config.trials; ++trial) {
        const std::uint64_t trial_seed =
            MixSeed(config.seed, (k * 1315423911ull + si) * 1000003ull + trial);
        auto row_for = [&](const QueryResult& r, double ms,
                           std::size_t removed) {
          return RunRow{.algorithm = r.algorithm,
                        .k = k,
                        .m = m,
                        .w = config.w,
                        .strategy = strategy.Label(),
                        .trial = trial,
                        .value = r.value,
                        .removed = removed,
                        .summary_size = s.size(),
                        .oracle_calls = r.oracle_calls,
                        .wall_ms = config.record_timing ? ms : 0.0,
                        .chosen = r.chosen};
        };

        ElementSet removed;
        if (deterministic && trial > 0) {
          removed = fixed_removal;
        } else {
          switch (strategy.strategy) {
            case RemovalStrategy::kRandomFromSummary:
              removed = RemoveRandom(s, strategy.size.Resolve(k), trial_seed).removed;
              break;
            case RemovalStrategy::kGreedyFromSummary:
              removed = RemoveGreedyAdversarial(s, strategy.size.Resolve(k), f).removed;
              break;
            case RemovalStrategy::kPopularityWeighted:
              removed = RemoveWeighted(ground, strategy.size.Resolve(k),
                                       popularity, trial_seed)
                            .removed;
              break;
            case RemovalStrategy::kPredicate:
              removed = RemoveByPredicate(ground, [&](ElementId e) {
                          auto it = rows_by_id.find(e);
                          if (it == rows_by_id.end()) return false;
                          const auto& g = it->second->genres;
                          return std::find(g.begin(), g.end(),
                                           strategy.keep_genre) != g.end();
                        }).removed;
              break;
          }
          fixed_removal = removed;
        }
        const ElementSet remaining = ground.Difference(removed);

        if (deterministic && trial > 0) {
          for (RunRow row : first_trial) {
            row.trial = trial;
            report.rows.push_back(std::move(row));
          }
        } else {
          std::vector<RunRow> rows;
          auto start = std::chrono::steady_clock::now();
          QueryResult r = summary.Greedy(removed, k, f);
          rows.push_back(row_for(r, MillisSince(start), removed.size()));

          start = std::chrono::steady_clock::now();
          r = summary.Sieve(removed, k, config.epsilon, f);
          rows.push_back(row_for(r, MillisSince(start), removed.size()));

          start = std::chrono::steady_clock::now();
          std::vector<ElementId> kept_stream;
          for (ElementId e : stream) {
            if (!removed.Contains(e)) kept_stream.push_back(e);
          }
          r = SieveStreaming(kept_stream, k, config.epsilon, f);
          rows.push_back(row_for(r, MillisSince(start), removed.size()));

          if (ground.size() <= config.greedy_limit) {
            start = std::chrono::steady_clock::now();
            r = Greedy(f, remaining, k);
            rows.push_back(row_for(r, MillisSince(start), removed.size()));
          }
          if (deterministic) first_trial = rows;
          for (auto& row : rows) report.rows.push_back(std::move(row));
        }

        const auto start = std::chrono::steady_clock::now();
        const QueryResult r = RandomBaseline(remaining, s.size(), k, trial_seed, f);
        report.rows.push_back(row_for(r, MillisSince(start), removed.size()));
      }
    }
  }
  return report;
}

RunReport RunExperiment(const ExperimentConfig& config) {
  return RunExperiment(config, LoadExperimentData(config));
}

}  // namespace robust_summary
