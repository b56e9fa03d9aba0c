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

#include "t2i/interval.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

namespace t2i {

namespace {

void require_finite_result(double q1, double q2, double q3, double q4) {
  if (!(std::isfinite(q1) && std::isfinite(q2) && std::isfinite(q3) &&
        std::isfinite(q4))) {
    throw NonFiniteResult();
  }
}

Type2Interval assemble(double q1, double q2, double q3, double q4) {
  require_finite_result(q1, q2, q3, q4);
  return Type2Interval::make(q1, q2, q3, q4);
}

}  // namespace

Type2Interval Type2Interval::make(double lower_lo, double lower_hi,
                                  double upper_lo, double upper_hi) {
  const std::array<double, 4> q = {lower_lo, lower_hi, upper_lo, upper_hi};
  for (double v : q) {
    if (!std::isfinite(v)) throw NonFiniteInput();
  }
  for (int i = 0; i < 3; ++i) {
    if (!(q[static_cast<std::size_t>(i)] <= q[static_cast<std::size_t>(i) + 1])) {
      throw OrderingViolation(i, q[static_cast<std::size_t>(i)],
                              q[static_cast<std::size_t>(i) + 1]);
    }
  }
  return Type2Interval(q);
}

Type2Quad quad_scale(double lambda, const Type2Quad& q) {
  if (lambda >= 0.0) {
    return Type2Quad::of(lambda * q.q1, lambda * q.q2, lambda * q.q3,
                         lambda * q.q4);
  }
  return Type2Quad::of(lambda * q.q4, lambda * q.q3, lambda * q.q2,
                       lambda * q.q1);
}

bool subset_of(const Type2Interval& a, const Type2Interval& b) {
  return b.lower_lo() <= a.lower_lo() && b.lower_hi() <= a.lower_hi() &&
         a.upper_lo() <= b.upper_lo() && a.upper_hi() <= b.upper_hi();
}

bool strict_subset_of(const Type2Interval& a, const Type2Interval& b) {
  return subset_of(a, b) && !equals(a, b);
}

bool equals(const Type2Interval& a, const Type2Interval& b) {
  return a.lower_lo() == b.lower_lo() && a.lower_hi() == b.lower_hi() &&
         a.upper_lo() == b.upper_lo() && a.upper_hi() == b.upper_hi();
}

Degeneracy degeneracy(const Type2Interval& a) {
  if (a.lower_lo() == a.upper_hi()) return Degeneracy::Degenerate1;
  if (a.lower_lo() == a.lower_hi() && a.upper_lo() == a.upper_hi()) {
    return Degeneracy::Degenerate2;
  }
  return Degeneracy::General;
}

std::pair<double, double> outer_hull(const Type2Interval& a) {
  return {a.lower_lo(), a.upper_hi()};
}

std::pair<double, double> inner_core(const Type2Interval& a) {
  return {a.lower_hi(), a.upper_lo()};
}

Type2Interval add(const Type2Interval& a, const Type2Interval& b) {
  return assemble(a.lower_lo() + b.lower_lo(), a.lower_hi() + b.lower_hi(),
                  a.upper_lo() + b.upper_lo(), a.upper_hi() + b.upper_hi());
}

Type2Interval sub(const Type2Interval& a, const Type2Interval& b) {
  return assemble(a.lower_lo() - b.upper_hi(), a.lower_hi() - b.upper_lo(),
                  a.upper_lo() - b.lower_hi(), a.upper_hi() - b.lower_lo());
}

Type2Interval scalar_mul(double lambda, const Type2Interval& a) {
  if (!std::isfinite(lambda)) throw NonFiniteInput();
  if (lambda >= 0.0) {
    return assemble(lambda * a.lower_lo(), lambda * a.lower_hi(),
                    lambda * a.upper_lo(), lambda * a.upper_hi());
  }
  return assemble(lambda * a.upper_hi(), lambda * a.upper_lo(),
                  lambda * a.lower_hi(), lambda * a.lower_lo());
}

Type2Interval mul(const Type2Interval& a, const Type2Interval& b) {
  // Outer pair: extreme products of the widest members; inner pair: extreme
  // products of the narrowest. Every inner product lies between the outer
  // extremes, so the result is always properly ordered.
  const double c1 = a.lower_lo() * b.lower_lo();
  const double c2 = a.lower_lo() * b.upper_hi();
  const double c3 = a.upper_hi() * b.lower_lo();
  const double c4 = a.upper_hi() * b.upper_hi();
  const double d1 = a.lower_hi() * b.lower_hi();
  const double d2 = a.lower_hi() * b.upper_lo();
  const double d3 = a.upper_lo() * b.lower_hi();
  const double d4 = a.upper_lo() * b.upper_lo();
  const double outer_min = std::min({c1, c2, c3, c4});
  const double outer_max = std::max({c1, c2, c3, c4});
  const double inner_min = std::min({d1, d2, d3, d4});
  const double inner_max = std::max({d1, d2, d3, d4});
  return assemble(outer_min, inner_min, inner_max, outer_max);
}

Type2Interval reciprocal(const Type2Interval& b) {
  if (b.lower_lo() <= 0.0 && 0.0 <= b.upper_hi()) throw ZeroInDenominator();
  // The reciprocal of a member [l, u] is [1/u, 1/l]; its endpoints range
  // over exactly these two intervals.
  return assemble(1.0 / b.upper_hi(), 1.0 / b.upper_lo(), 1.0 / b.lower_hi(),
                  1.0 / b.lower_lo());
}

Type2Interval div(const Type2Interval& a, const Type2Interval& b) {
  return mul(a, reciprocal(b));
}

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string to_string(const Type2Interval& a) {
  return "[(" + format_double(a.lower_lo()) + "," + format_double(a.lower_hi()) +
         "),(" + format_double(a.upper_lo()) + "," +
         format_double(a.upper_hi()) + ")]";
}

std::string to_string(const Type2Quad& q) {
  return "(" + format_double(q.q1) + "," + format_double(q.q2) + "," +
         format_double(q.q3) + "," + format_double(q.q4) + ")";
}

std::ostream& operator<<(std::ostream& os, const Type2Interval& a) {
  return os << to_string(a);
}

std::ostream& operator<<(std::ostream& os, const Type2Quad& q) {
  return os << to_string(q);
}

}  // namespace t2i
