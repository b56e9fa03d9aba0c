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
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "t2i/interval.hpp"

// Independent ground-truth semantics for Type-2 arithmetic.
//
// A Type-2 interval denotes a family of ordinary intervals. Results here are
// computed by enumerating the 16 extreme endpoint configurations of the two
// operand families and by seeded Monte Carlo membership sampling — never by
// the closed-form operations in interval.hpp, which this module arbitrates.
namespace t2i::oracle {

// Ordinary closed interval with textbook Moore arithmetic.
struct Type1Interval {
  double lo = 0.0;
  double hi = 0.0;

  static Type1Interval make(double lo, double hi);

  friend bool operator==(const Type1Interval&, const Type1Interval&) = default;
};

enum class BinaryOpTag { Add, Sub, Mul, Div };

std::string op_name(BinaryOpTag op);

// Moore arithmetic on Type-1 intervals. Div requires 0 outside [b.lo, b.hi]
// and is computed as multiplication by [1/b.hi, 1/b.lo].
Type1Interval type1_op(BinaryOpTag op, const Type1Interval& a,
                       const Type1Interval& b);

// Enumerates all 16 corner members (each operand's lower endpoint at either
// end of its bound interval, likewise the upper), applies Moore arithmetic,
// and summarizes: [(min of result lowers, max of result lowers),
// (min of result uppers, max of result uppers)]. Inclusion monotonicity of
// Type-1 arithmetic puts the extremes at corners, so this is exact.
Type2Interval corner_result(BinaryOpTag op, const Type2Interval& a,
                            const Type2Interval& b);

// Soundness report for corner_result on one operand pair.
struct MembershipReport {
  BinaryOpTag op = BinaryOpTag::Add;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  std::uint64_t violations = 0;
  Type2Interval claimed;
  // Extremes attained by the sampled members, in component order
  // (min lower, max lower, min upper, max upper).
  std::array<double, 4> achieved{};
  // Distance from each achieved extreme to the claimed one, normalized by
  // the width of the claimed bound interval (0 when that width is zero).
  std::array<double, 4> coverage_gap{};
  // The sampled member pair (a_lo, a_hi, b_lo, b_hi) whose result attained
  // the largest lower bound.
  std::array<double, 4> max_lower_member{};
  double max_sampled_lower = 0.0;
};

// Draws n random family members of a and b (endpoints uniform within their
// bound intervals, mt19937_64 seeded as documented below), computes the
// Type-1 result of each, and checks that its lower bound falls inside the
// claimed lower-bound interval and its upper inside the claimed upper-bound
// interval. Sampling is split into fixed-size chunks whose sub-seeds are
// derived from (seed, chunk index), so results do not depend on how chunks
// are scheduled.
MembershipReport sample_membership(BinaryOpTag op, const Type2Interval& a,
                                   const Type2Interval& b, std::uint64_t n,
                                   std::uint64_t seed);

// Random valid quadruple: four uniform draws from [lo, hi], sorted.
Type2Interval random_interval(std::mt19937_64& rng, double lo, double hi);

// As above but with 0 outside the outer hull (safe as a denominator).
Type2Interval random_zero_free_interval(std::mt19937_64& rng, double magnitude);

struct FuzzOpReport {
  BinaryOpTag op = BinaryOpTag::Add;
  std::uint64_t pairs = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t membership_violations = 0;
};

struct FuzzReport {
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  std::vector<FuzzOpReport> per_op;
  bool pass = true;
};

// Generates n random valid operand pairs per op (zero-free denominators for
// Div), asserts exact componentwise equality between the closed-form
// operations and corner_result, and runs a small membership sample on each
// pair. Deterministic for a fixed seed.
FuzzReport fuzz_against_corners(const std::vector<BinaryOpTag>& ops,
                                std::uint64_t n, std::uint64_t seed,
                                std::uint64_t membership_per_pair = 64);

}  // namespace t2i::oracle
