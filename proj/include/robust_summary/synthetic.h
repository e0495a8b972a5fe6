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
// Seeded synthetic datasets so experiments run without downloads.

#ifndef ROBUST_SUMMARY_SYNTHETIC_H_
#define ROBUST_SUMMARY_SYNTHETIC_H_

#include <cstdint>
#include <vector>

#include "robust_summary/io.h"

namespace robust_summary {

struct PowerLawGraphOptions {
  std::size_t nodes = 2000;
  double exponent = 2.0;  // P(out-degree = d) ∝ d^-exponent
  std::size_t min_degree = 1;
  std::size_t max_degree = 200;
  std::uint64_t seed = 1;
};

// Directed graph on ids 0..nodes-1 with power-law out-degrees and uniformly
// chosen targets (no self loops, no parallel edges).
EdgeListDocument PowerLawGraph(const PowerLawGraphOptions& options);

struct MovieDataOptions {
  std::size_t rows = 3900;
  std::size_t dimension = 30;
  std::size_t clusters = 25;
  double drama_fraction = 0.41;
  // Average user-movie score; ratings on a 1-5 scale average about 3.6.
  double mean_rating = 3.6;
  std::uint64_t seed = 1;
};

struct MovieData {
  FeatureTable table;
  std::vector<double> user;
};

// Clustered latent features, Zipf-like popularity, and genre tags in which
// exactly round(drama_fraction * rows) rows carry "Drama".
MovieData SyntheticMovies(const MovieDataOptions& options);

// SplitMix64 step; used to derive independent per-trial seeds.
std::uint64_t MixSeed(std::uint64_t base, std::uint64_t salt);

}  // namespace robust_summary

#endif  // ROBUST_SUMMARY_SYNTHETIC_H_
