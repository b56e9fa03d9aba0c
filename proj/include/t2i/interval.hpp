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

#include <array>
#include <iosfwd>
#include <string>
#include <utility>

#include "t2i/errors.hpp"

namespace t2i {

// An interval whose lower and upper bounds are themselves intervals.
//
// The value [(q1, q2), (q3, q4)] stands for the family of ordinary closed
// intervals [l, u] with l in [q1, q2] and u in [q3, q4].
//
// Invariant: q1 <= q2 <= q3 <= q4 and all four components are finite.
// Instances are immutable; all operations are pure functions, so values can
// be shared freely across threads.
class Type2Interval {
 public:
  // The zero interval [(0,0),(0,0)].
  Type2Interval() : q_{0.0, 0.0, 0.0, 0.0} {}

  // Validating constructor. Throws NonFiniteInput or OrderingViolation
  // (naming the first adjacent pair out of order).
  static Type2Interval make(double lower_lo, double lower_hi, double upper_lo,
                            double upper_hi);

  static Type2Interval zero() { return Type2Interval(); }
  static Type2Interval one() { return make(1.0, 1.0, 1.0, 1.0); }

  double lower_lo() const { return q_[0]; }
  double lower_hi() const { return q_[1]; }
  double upper_lo() const { return q_[2]; }
  double upper_hi() const { return q_[3]; }

  double component(int i) const { return q_[static_cast<std::size_t>(i)]; }
  const std::array<double, 4>& components() const { return q_; }

  friend bool operator==(const Type2Interval&, const Type2Interval&) = default;

 private:
  explicit Type2Interval(std::array<double, 4> q) : q_(q) {}
  std::array<double, 4> q_;
};

// Unvalidated quadruple with a properness flag. Results of the generalized
// Hukuhara difference and of differentiation may violate the Type-2
// ordering; they are carried here instead of being rejected or re-sorted.
struct Type2Quad {
  double q1 = 0.0;
  double q2 = 0.0;
  double q3 = 0.0;
  double q4 = 0.0;
  bool proper = true;  // q1 <= q2 <= q3 <= q4

  static Type2Quad of(double q1, double q2, double q3, double q4) {
    return Type2Quad{q1, q2, q3, q4, q1 <= q2 && q2 <= q3 && q3 <= q4};
  }
  static Type2Quad from(const Type2Interval& v) {
    return Type2Quad{v.lower_lo(), v.lower_hi(), v.upper_lo(), v.upper_hi(),
                     true};
  }

  std::array<double, 4> values() const { return {q1, q2, q3, q4}; }

  // Lossless when proper; throws OrderingViolation otherwise.
  Type2Interval to_interval() const {
    return Type2Interval::make(q1, q2, q3, q4);
  }

  friend bool operator==(const Type2Quad&, const Type2Quad&) = default;
};

// Scalar multiple of a quad: the lambda < 0 branch reverses the components,
// mirroring scalar multiplication of intervals. The proper flag is
// recomputed from the resulting values.
Type2Quad quad_scale(double lambda, const Type2Quad& q);

enum class Degeneracy {
  General,      // all four components may differ
  Degenerate2,  // lower pair equal and upper pair equal: an ordinary interval
  Degenerate1,  // all four equal: a single real number
};

// Containment: both the outer hulls and the inner cores must nest.
bool subset_of(const Type2Interval& a, const Type2Interval& b);
bool strict_subset_of(const Type2Interval& a, const Type2Interval& b);

// Componentwise equality (equivalent to containment both ways).
bool equals(const Type2Interval& a, const Type2Interval& b);

Degeneracy degeneracy(const Type2Interval& a);

// The widest family member [q1, q4] and the narrowest [q2, q3].
std::pair<double, double> outer_hull(const Type2Interval& a);
std::pair<double, double> inner_core(const Type2Interval& a);

// Arithmetic. All five operations preserve the ordering invariant and throw
// NonFiniteResult if a component overflows.
Type2Interval add(const Type2Interval& a, const Type2Interval& b);
Type2Interval sub(const Type2Interval& a, const Type2Interval& b);
Type2Interval scalar_mul(double lambda, const Type2Interval& a);
Type2Interval mul(const Type2Interval& a, const Type2Interval& b);

// Reciprocal and division require zero outside the denominator's outer
// hull; otherwise ZeroInDenominator is thrown.
Type2Interval reciprocal(const Type2Interval& b);
Type2Interval div(const Type2Interval& a, const Type2Interval& b);

inline Type2Interval operator+(const Type2Interval& a, const Type2Interval& b) {
  return add(a, b);
}
inline Type2Interval operator-(const Type2Interval& a, const Type2Interval& b) {
  return sub(a, b);
}
inline Type2Interval operator*(const Type2Interval& a, const Type2Interval& b) {
  return mul(a, b);
}
inline Type2Interval operator/(const Type2Interval& a, const Type2Interval& b) {
  return div(a, b);
}
inline Type2Interval operator*(double lambda, const Type2Interval& a) {
  return scalar_mul(lambda, a);
}
inline Type2Interval operator*(const Type2Interval& a, double lambda) {
  return scalar_mul(lambda, a);
}
inline Type2Interval operator-(const Type2Interval& a) {
  return scalar_mul(-1.0, a);
}

// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

// Renders as [(q1,q2),(q3,q4)] with shortest round-trip numbers.
std::string to_string(const Type2Interval& a);
std::string to_string(const Type2Quad& q);

std::ostream& operator<<(std::ostream& os, const Type2Interval& a);
std::ostream& operator<<(std::ostream& os, const Type2Quad& q);

}  // namespace t2i
