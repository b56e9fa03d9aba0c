// Copyright 2026 The t2i Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "t2i/interval.hpp"
#include "t2i/oracle.hpp"

namespace t2i::testing {

// Quadruple on the grid of sixteenths with entries below 2^16 in magnitude.
// Sums, differences and products of such values are exact doubles, which
// lets algebraic identities be asserted with == instead of tolerances.
inline Type2Interval random_dyadic_interval(std::mt19937_64& rng,
                                            int max_numerator = 1 << 20) {
  std::uniform_int_distribution<int> dist(-max_numerator, max_numerator);
  std::array<double, 4> q;
  for (double& v : q) v = dist(rng) / 16.0;
  std::sort(q.begin(), q.end());
  return Type2Interval::make(q[0], q[1], q[2], q[3]);
}

inline Type2Interval random_dyadic_zero_free(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(16, 1 << 16);
  std::array<double, 4> q;
  for (double& v : q) v = dist(rng) / 16.0;
  std::sort(q.begin(), q.end());
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 1) {
    return Type2Interval::make(-q[3], -q[2], -q[1], -q[0]);
  }
  return Type2Interval::make(q[0], q[1], q[2], q[3]);
}

inline bool approx_equal(double a, double b, double tol) {
  return std::fabs(a - b) <= tol;
}

inline double max_component_gap(const Type2Interval& a,
                                const Type2Interval& b) {
  double gap = 0.0;
  for (int i = 0; i < 4; ++i) {
    gap = std::max(gap, std::fabs(a.component(i) - b.component(i)));
  }
  return gap;
}

inline double max_component_gap(const Type2Quad& a, const Type2Quad& b) {
  const auto va = a.values();
  const auto vb = b.values();
  double gap = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    gap = std::max(gap, std::fabs(va[i] - vb[i]));
  }
  return gap;
}

}  // namespace t2i::testing
