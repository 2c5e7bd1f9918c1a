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

#ifndef FPTSUB_ROUNDING_HPP_
#define FPTSUB_ROUNDING_HPP_

#include <span>
#include <vector>

namespace fptsub {

// Finite geometric grid {base·(1+ε)^i : i = 0..top} and its floor operator.
// Values are produced by repeated multiplication, one stored double per
// index, so thresholds taken from the same grid compare bit-identically.
class RoundingGrid {
 public:
  RoundingGrid(double base, double epsilon, int top_exponent);

  // Grid from explicit values (strictly increasing, positive).
  static RoundingGrid from_values(std::vector<double> values, double epsilon);

  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double epsilon() const { return epsilon_; }
  double min() const { return values_.front(); }
  double max() const { return values_.back(); }

  // Greatest grid value <= a, or min() when a is below the grid.
  double floor(double a) const;

 private:
  RoundingGrid() = default;

  std::vector<double> values_;
  double epsilon_ = 0.0;
};

// ⌈log_{1+ε}(x)⌉, snapped to the nearest integer when within 1e-9 of it so
// exact powers are not pushed up by rounding in the logarithm.
int ceil_log(double x, double epsilon);

// {(1+ε)^i · ε²w/r² : i = 0..⌈2 log_{1+ε}(r/ε)⌉}; requires ε in (0, 1),
// w > 0 and r >= 1. The streaming run itself only uses ε < 1/2.
RoundingGrid make_streaming_grid(double epsilon, double w, int r);
int streaming_grid_size(double epsilon, int r);

// {(1+ε)^i · ε²v/r : i = 0..⌈log_{1+ε}(r/ε)⌉}; requires ε in (0, 1],
// v > 0 and r >= 1.
RoundingGrid make_offline_grid(double epsilon, double v, int r);
int offline_grid_size(double epsilon, int r);

}  // namespace fptsub

#endif  // FPTSUB_ROUNDING_HPP_
