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

#include "t2i/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace t2i::oracle {

namespace {

constexpr std::uint64_t kChunkSize = 4096;

// splitmix64 finalizer; derives independent sub-seeds from (seed, salt).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  if (lo == hi) return lo;
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace

Type1Interval Type1Interval::make(double lo, double hi) {
  if (!(std::isfinite(lo) && std::isfinite(hi))) throw NonFiniteInput();
  if (!(lo <= hi)) throw OrderingViolation(0, lo, hi);
  return Type1Interval{lo, hi};
}

std::string op_name(BinaryOpTag op) {
  switch (op) {
    case BinaryOpTag::Add: return "add";
    case BinaryOpTag::Sub: return "sub";
    case BinaryOpTag::Mul: return "mul";
    case BinaryOpTag::Div: return "div";
  }
  return "?";
}

Type1Interval type1_op(BinaryOpTag op, const Type1Interval& a,
                       const Type1Interval& b) {
  switch (op) {
    case BinaryOpTag::Add:
      return Type1Interval{a.lo + b.lo, a.hi + b.hi};
    case BinaryOpTag::Sub:
      return Type1Interval{a.lo - b.hi, a.hi - b.lo};
    case BinaryOpTag::Mul: {
      const double p1 = a.lo * b.lo;
      const double p2 = a.lo * b.hi;
      const double p3 = a.hi * b.lo;
      const double p4 = a.hi * b.hi;
      return Type1Interval{std::min({p1, p2, p3, p4}),
                           std::max({p1, p2, p3, p4})};
    }
    case BinaryOpTag::Div: {
      if (b.lo <= 0.0 && 0.0 <= b.hi) throw ZeroInDenominator();
      return type1_op(BinaryOpTag::Mul, a, Type1Interval{1.0 / b.hi, 1.0 / b.lo});
    }
  }
  throw std::logic_error("unreachable op tag");
}

Type2Interval corner_result(BinaryOpTag op, const Type2Interval& a,
                            const Type2Interval& b) {
  if (op == BinaryOpTag::Div && b.lower_lo() <= 0.0 && 0.0 <= b.upper_hi()) {
    throw ZeroInDenominator();
  }
  const double a_lo[2] = {a.lower_lo(), a.lower_hi()};
  const double a_hi[2] = {a.upper_lo(), a.upper_hi()};
  const double b_lo[2] = {b.lower_lo(), b.lower_hi()};
  const double b_hi[2] = {b.upper_lo(), b.upper_hi()};

  double min_lower = std::numeric_limits<double>::infinity();
  double max_lower = -std::numeric_limits<double>::infinity();
  double min_upper = std::numeric_limits<double>::infinity();
  double max_upper = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          const Type1Interval r = type1_op(op, Type1Interval{a_lo[i], a_hi[j]},
                                           Type1Interval{b_lo[k], b_hi[l]});
          min_lower = std::min(min_lower, r.lo);
          max_lower = std::max(max_lower, r.lo);
          min_upper = std::min(min_upper, r.hi);
          max_upper = std::max(max_upper, r.hi);
        }
      }
    }
  }
  return Type2Interval::make(min_lower, max_lower, min_upper, max_upper);
}

MembershipReport sample_membership(BinaryOpTag op, const Type2Interval& a,
                                   const Type2Interval& b, std::uint64_t n,
                                   std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("sample_membership: n must be >= 1");

  MembershipReport report;
  report.op = op;
  report.n = n;
  report.seed = seed;
  report.claimed = corner_result(op, a, b);

  double min_lower = std::numeric_limits<double>::infinity();
  double max_lower = -std::numeric_limits<double>::infinity();
  double min_upper = std::numeric_limits<double>::infinity();
  double max_upper = -std::numeric_limits<double>::infinity();

  std::uint64_t done = 0;
  for (std::uint64_t chunk = 0; done < n; ++chunk) {
    std::mt19937_64 rng(mix_seed(seed, chunk));
    const std::uint64_t batch = std::min(kChunkSize, n - done);
    for (std::uint64_t i = 0; i < batch; ++i) {
      const double sa_lo = uniform_in(rng, a.lower_lo(), a.lower_hi());
      const double sa_hi = uniform_in(rng, a.upper_lo(), a.upper_hi());
      const double sb_lo = uniform_in(rng, b.lower_lo(), b.lower_hi());
      const double sb_hi = uniform_in(rng, b.upper_lo(), b.upper_hi());
      const Type1Interval r = type1_op(op, Type1Interval{sa_lo, sa_hi},
                                       Type1Interval{sb_lo, sb_hi});
      if (!(report.claimed.lower_lo() <= r.lo &&
            r.lo <= report.claimed.lower_hi() &&
            report.claimed.upper_lo() <= r.hi &&
            r.hi <= report.claimed.upper_hi())) {
        ++report.violations;
      }
      if (r.lo > max_lower) {
        max_lower = r.lo;
        report.max_lower_member = {sa_lo, sa_hi, sb_lo, sb_hi};
      }
      min_lower = std::min(min_lower, r.lo);
      min_upper = std::min(min_upper, r.hi);
      max_upper = std::max(max_upper, r.hi);
    }
    done += batch;
  }

  report.achieved = {min_lower, max_lower, min_upper, max_upper};
  report.max_sampled_lower = max_lower;

  const double lower_width =
      report.claimed.lower_hi() - report.claimed.lower_lo();
  const double upper_width =
      report.claimed.upper_hi() - report.claimed.upper_lo();
  const std::array<double, 4> claimed = report.claimed.components();
  const std::array<double, 4> widths = {lower_width, lower_width, upper_width,
                                        upper_width};
  for (int i = 0; i < 4; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    const double gap = std::fabs(report.achieved[idx] - claimed[idx]);
    report.coverage_gap[idx] = widths[idx] > 0.0 ? gap / widths[idx] : gap;
  }
  return report;
}

Type2Interval random_interval(std::mt19937_64& rng, double lo, double hi) {
  std::array<double, 4> q;
  for (double& v : q) v = uniform_in(rng, lo, hi);
  std::sort(q.begin(), q.end());
  return Type2Interval::make(q[0], q[1], q[2], q[3]);
}

Type2Interval random_zero_free_interval(std::mt19937_64& rng,
                                        double magnitude) {
  std::array<double, 4> q;
  for (double& v : q) v = uniform_in(rng, 0.01 * magnitude, magnitude);
  std::sort(q.begin(), q.end());
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 1) {
    return Type2Interval::make(-q[3], -q[2], -q[1], -q[0]);
  }
  return Type2Interval::make(q[0], q[1], q[2], q[3]);
}

FuzzReport fuzz_against_corners(const std::vector<BinaryOpTag>& ops,
                                std::uint64_t n, std::uint64_t seed,
                                std::uint64_t membership_per_pair) {
  FuzzReport report;
  report.n = n;
  report.seed = seed;

  std::uint64_t op_index = 0;
  for (BinaryOpTag op : ops) {
    FuzzOpReport op_report;
    op_report.op = op;
    op_report.pairs = n;
    std::mt19937_64 rng(mix_seed(seed, op_index));
    for (std::uint64_t i = 0; i < n; ++i) {
      const Type2Interval a = random_interval(rng, -100.0, 100.0);
      const Type2Interval b = op == BinaryOpTag::Div
                                  ? random_zero_free_interval(rng, 100.0)
                                  : random_interval(rng, -100.0, 100.0);
      Type2Interval closed_form;
      switch (op) {
        case BinaryOpTag::Add: closed_form = add(a, b); break;
        case BinaryOpTag::Sub: closed_form = sub(a, b); break;
        case BinaryOpTag::Mul: closed_form = mul(a, b); break;
        case BinaryOpTag::Div: closed_form = div(a, b); break;
      }
      if (!equals(closed_form, corner_result(op, a, b))) {
        ++op_report.mismatches;
      }
      if (membership_per_pair > 0) {
        const MembershipReport m = sample_membership(
            op, a, b, membership_per_pair, mix_seed(seed, (op_index << 32) + i));
        op_report.membership_violations += m.violations;
      }
    }
    if (op_report.mismatches != 0 || op_report.membership_violations != 0) {
      report.pass = false;
    }
    report.per_op.push_back(op_report);
    ++op_index;
  }
  return report;
}

}  // namespace t2i::oracle
