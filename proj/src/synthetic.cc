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

#include "robust_summary/synthetic.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace robust_summary {

std::uint64_t MixSeed(std::uint64_t base, std::uint64_t salt) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

EdgeListDocument PowerLawGraph(const PowerLawGraphOptions& options) {
  if (options.nodes < 2) throw std::invalid_argument("need at least 2 nodes");
  if (options.min_degree < 1 || options.min_degree > options.max_degree) {
    throw std::invalid_argument("bad degree range");
  }
  std::mt19937_64 rng(options.seed);
  const std::size_t max_degree =
      std::min(options.max_degree, options.nodes - 1);
  std::vector<double> weights;
  for (std::size_t d = options.min_degree; d <= max_degree; ++d) {
    weights.push_back(std::pow(static_cast<double>(d), -options.exponent));
  }
  std::discrete_distribution<std::size_t> degree(weights.begin(),
                                                 weights.end());
  std::uniform_int_distribution<std::uint32_t> target(
      0, static_cast<std::uint32_t>(options.nodes - 1));

  EdgeListDocument doc;
  doc.directed = true;
  std::vector<ElementId> nodes;
  for (std::uint32_t u = 0; u < options.nodes; ++u) {
    nodes.push_back(ElementId{u});
    const std::size_t d = options.min_degree + degree(rng);
    std::unordered_set<std::uint32_t> seen;
    while (seen.size() < d) {
      const std::uint32_t v = target(rng);
      if (v == u || !seen.insert(v).second) continue;
      doc.edges.emplace_back(ElementId{u}, ElementId{v});
    }
  }
  doc.universe = ElementSet(std::move(nodes));
  return doc;
}

MovieData SyntheticMovies(const MovieDataOptions& options) {
  if (options.rows == 0 || options.dimension < 2 || options.clusters == 0) {
    throw std::invalid_argument(
        "rows and clusters must be > 0 and dimension >= 2");
  }
  if (!(options.drama_fraction >= 0.0 && options.drama_fraction <= 1.0)) {
    throw std::invalid_argument("drama fraction must lie in [0, 1]");
  }
  static const char* const kOtherGenres[] = {
      "Comedy", "Action", "Thriller", "Romance",
      "Horror", "Sci-Fi", "Adventure", "Documentary"};
  constexpr std::size_t kOtherCount = std::size(kOtherGenres);

  // Factor model: coordinate 0 is a shared rating level with
  // <u, v> averaging options.mean_rating; the remaining coordinates are a
  // cluster centre plus noise, sized so the residual score has unit spread.
  const std::size_t d = options.dimension;
  const double level = std::sqrt(options.mean_rating);
  const double spread =
      std::pow(static_cast<double>(d - 1), -0.25);  // per-coordinate std
  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> centre(0.0, 0.8 * spread);
  std::normal_distribution<double> noise(0.0, 0.6 * spread);
  std::normal_distribution<double> user_coord(0.0, spread);
  std::normal_distribution<double> level_jitter(1.0, 0.1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> cluster_of(0,
                                                        options.clusters - 1);
  std::uniform_int_distribution<std::size_t> other_genre(0, kOtherCount - 1);

  std::vector<std::vector<double>> centres(options.clusters,
                                           std::vector<double>(d, 0.0));
  std::vector<double> drama_affinity(options.clusters);
  for (std::size_t c = 0; c < options.clusters; ++c) {
    for (std::size_t j = 1; j < d; ++j) centres[c][j] = centre(rng);
    drama_affinity[c] = 0.05 + unit(rng);
  }

  std::vector<std::size_t> cluster(options.rows);
  for (auto& c : cluster) c = cluster_of(rng);

  // Exactly round(fraction * rows) Drama rows, drawn without replacement
  // with probability proportional to the cluster's affinity.
  const auto drama_rows = static_cast<std::size_t>(
      std::llround(options.drama_fraction * static_cast<double>(options.rows)));
  std::vector<std::pair<double, std::size_t>> keys(options.rows);
  for (std::size_t r = 0; r < options.rows; ++r) {
    keys[r] = {std::log(unit(rng)) / drama_affinity[cluster[r]], r};
  }
  std::partial_sort(keys.begin(), keys.begin() + drama_rows, keys.end(),
                    std::greater<>());
  std::vector<char> is_drama(options.rows, 0);
  for (std::size_t i = 0; i < drama_rows; ++i) is_drama[keys[i].second] = 1;

  MovieData data;
  data.table.dimension = d;
  data.table.has_genres = true;
  data.table.has_popularity = true;
  for (std::size_t r = 0; r < options.rows; ++r) {
    FeatureRow row;
    row.id = ElementId{static_cast<std::uint32_t>(r)};
    if (is_drama[r]) row.genres.emplace_back("Drama");
    const std::size_t extra = is_drama[r] ? (unit(rng) < 0.5 ? 1 : 0) : 1;
    for (std::size_t g = 0; g < extra; ++g) {
      row.genres.emplace_back(kOtherGenres[other_genre(rng)]);
    }
    // Heavy-tailed rating counts.
    row.popularity = std::floor(5.0 * std::pow(1.0 - unit(rng), -1.0 / 1.1));
    const auto& c = centres[cluster[r]];
    row.features.resize(d);
    row.features[0] = level * level_jitter(rng);
    for (std::size_t j = 1; j < d; ++j) row.features[j] = c[j] + noise(rng);
    data.table.rows.push_back(std::move(row));
  }
  data.user.resize(d);
  data.user[0] = level;
  for (std::size_t j = 1; j < d; ++j) data.user[j] = user_coord(rng);
  return data;
}

}  // namespace robust_summary
