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

#ifndef ROBUST_SUMMARY_GEOMETRIC_GRID_H_
#define ROBUST_SUMMARY_GEOMETRIC_GRID_H_

#include <cmath>
#include <stdexcept>

namespace robust_summary {

// Guesses of the optimum live on the grid (1 + eps)^i and are always keyed by
// the integer exponent i. These helpers are the only place the grid values
// are computed, so every comparison sees the same double.
inline double GridValue(int exponent, double epsilon) {
  return std::pow(1.0 + epsilon, exponent);
}

// Smallest i with (1 + eps)^i >= value. Requires value > 0.
inline int CeilExponent(double value, double epsilon) {
  if (!(value > 0.0)) throw std::invalid_argument("grid value must be > 0");
  int i = static_cast<int>(std::ceil(std::log(value) / std::log1p(epsilon)));
  while (GridValue(i - 1, epsilon) >= value) --i;
  while (GridValue(i, epsilon) < value) ++i;
  return i;
}

// Largest i with (1 + eps)^i <= value. Requires value > 0.
inline int FloorExponent(double value, double epsilon) {
  if (!(value > 0.0)) throw std::invalid_argument("grid value must be > 0");
  int i = static_cast<int>(std::floor(std::log(value) / std::log1p(epsilon)));
  while (GridValue(i + 1, epsilon) <= value) ++i;
  while (GridValue(i, epsilon) > value) --i;
  return i;
}

}  // namespace robust_summary

#endif  // ROBUST_SUMMARY_GEOMETRIC_GRID_H_
