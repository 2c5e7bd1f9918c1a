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

#include "fptsub/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fptsub {

RoundingGrid::RoundingGrid(double base, double epsilon, int top_exponent) : epsilon_(epsilon) {
  if (!(base > 0.0) || !std::isfinite(base)) {
    throw std::invalid_argument("RoundingGrid: base must be positive and finite");
  }
  if (!(epsilon > 0.0)) throw std::invalid_argument("RoundingGrid: epsilon must be positive");
  if (top_exponent < 0) throw std::invalid_argument("RoundingGrid: negative top exponent");
  values_.reserve(static_cast<std::size_t>(top_exponent) + 1);
  double v = base;
  for (int i = 0; i <= top_exponent; ++i) {
    values_.push_back(v);
    v *= 1.0 + epsilon;
  }
}

RoundingGrid RoundingGrid::from_values(std::vector<double> values, double epsilon) {
  if (values.empty()) throw std::invalid_argument("RoundingGrid: empty grid");
  if (!(values.front() > 0.0) || !std::isfinite(values.back())) {
    throw std::invalid_argument("RoundingGrid: values must be positive and finite");
  }
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i - 1] < values[i])) {
      throw std::invalid_argument("RoundingGrid: values must be strictly increasing");
    }
  }
  RoundingGrid grid;
  grid.values_ = std::move(values);
  grid.epsilon_ = epsilon;
  return grid;
}

double RoundingGrid::floor(double a) const {
  const auto it = std::upper_bound(values_.begin(), values_.end(), a);
  return it == values_.begin() ? values_.front() : *(it - 1);
}

int ceil_log(double x, double epsilon) {
  const double exact = std::log(x) / std::log1p(epsilon);
  const double nearest = std::round(exact);
  if (std::abs(exact - nearest) < 1e-9) return static_cast<int>(nearest);
  return static_cast<int>(std::ceil(exact));
}

int streaming_grid_size(double epsilon, int r) {
  return ceil_log((static_cast<double>(r) / epsilon) * (static_cast<double>(r) / epsilon),
                  epsilon) +
         1;
}

RoundingGrid make_streaming_grid(double epsilon, double w, int r) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("make_streaming_grid: epsilon must lie in (0, 1)");
  }
  if (!(w > 0.0)) throw std::invalid_argument("make_streaming_grid: w must be positive");
  if (r < 1) throw std::invalid_argument("make_streaming_grid: r must be >= 1");
  const double base = epsilon * epsilon * w / (static_cast<double>(r) * r);
  return RoundingGrid(base, epsilon, streaming_grid_size(epsilon, r) - 1);
}

int offline_grid_size(double epsilon, int r) {
  return ceil_log(static_cast<double>(r) / epsilon, epsilon) + 1;
}

RoundingGrid make_offline_grid(double epsilon, double v, int r) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("make_offline_grid: epsilon must lie in (0, 1]");
  }
  if (!(v > 0.0)) throw std::invalid_argument("make_offline_grid: v must be positive");
  if (r < 1) throw std::invalid_argument("make_offline_grid: r must be >= 1");
  const double base = epsilon * epsilon * v / r;
  return RoundingGrid(base, epsilon, offline_grid_size(epsilon, r) - 1);
}

}  // namespace fptsub
