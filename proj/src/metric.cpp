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

#include "t2i/metric.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <stdexcept>

namespace t2i {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

double distance(const Type2Interval& x, const Type2Interval& y) {
  return std::max({std::fabs(x.lower_lo() - y.lower_lo()),
                   std::fabs(x.lower_hi() - y.lower_hi()),
                   std::fabs(x.upper_lo() - y.upper_lo()),
                   std::fabs(x.upper_hi() - y.upper_hi())});
}

double norm(const Type2Interval& x) {
  return std::max({std::fabs(x.lower_lo()), std::fabs(x.lower_hi()),
                   std::fabs(x.upper_lo()), std::fabs(x.upper_hi())});
}

Type2Interval Type2Sequence::operator()(std::uint64_t n) const {
  require(n >= 1, "sequence index starts at 1");
  return term_(n);
}

std::string verdict_status_name(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::ConfirmedUpTo: return "confirmed_up_to";
    case VerdictStatus::RefutedAt: return "refuted_at";
    case VerdictStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

ConvergenceVerdict check_convergence(const Type2Sequence& seq,
                                     const Type2Interval& limit,
                                     double epsilon, std::uint64_t n0,
                                     std::uint64_t n_max) {
  require(epsilon > 0.0, "epsilon must be positive");
  require(n0 >= 1 && n0 <= n_max, "need 1 <= n0 <= n_max");

  double worst = 0.0;
  for (std::uint64_t n = n0; n <= n_max; ++n) {
    const double d = distance(seq(n), limit);
    if (d >= epsilon) {
      return {VerdictStatus::RefutedAt, n, d};
    }
    worst = std::max(worst, d);
  }
  return {VerdictStatus::ConfirmedUpTo, n_max, worst};
}

Type2Interval estimate_limit(const Type2Sequence& seq, std::uint64_t n_probe,
                             const TailOptions& options) {
  require(n_probe >= 8, "n_probe must be >= 8");
  require(options.window >= 2, "window must be >= 2");

  const auto window = static_cast<std::size_t>(options.window);
  std::deque<std::array<double, 4>> probes;      // values at ladder indices
  std::deque<std::array<double, 4>> step_gaps;   // |seq(m+1) - seq(m)| at those
  std::uint64_t index = n_probe;

  auto component_stable = [&](std::size_t i) {
    if (probes.size() < window) return false;
    for (std::size_t k = 1; k < probes.size(); ++k) {
      if (!(std::fabs(probes[k][i] - probes[k - 1][i]) < options.tol)) {
        return false;
      }
    }
    for (const auto& gap : step_gaps) {
      if (!(gap[i] < options.tol)) return false;
    }
    return true;
  };

  for (int k = 0; k <= options.max_doublings; ++k) {
    const Type2Interval at = seq(index);
    const Type2Interval next = seq(index + 1);
    probes.push_back(at.components());
    step_gaps.push_back({std::fabs(next.lower_lo() - at.lower_lo()),
                         std::fabs(next.lower_hi() - at.lower_hi()),
                         std::fabs(next.upper_lo() - at.upper_lo()),
                         std::fabs(next.upper_hi() - at.upper_hi())});
    if (probes.size() > window) {
      probes.pop_front();
      step_gaps.pop_front();
    }
    if (component_stable(0) && component_stable(1) && component_stable(2) &&
        component_stable(3)) {
      return at;
    }
    index *= 2;
  }
  for (std::size_t i = 0; i < 4; ++i) {
    if (!component_stable(i)) throw LimitNotApparent(static_cast<int>(i));
  }
  throw LimitNotApparent(0);
}

ConvergenceVerdict check_cauchy(const Type2Sequence& seq, double epsilon,
                                std::uint64_t n0, std::uint64_t n_max,
                                std::uint64_t pair_budget, std::uint64_t seed) {
  require(epsilon > 0.0, "epsilon must be positive");
  require(n0 >= 1 && n0 < n_max, "need 1 <= n0 < n_max");
  require(pair_budget >= 1, "pair_budget must be >= 1");

  double worst = 0.0;
  auto probe = [&](std::uint64_t n, std::uint64_t m) -> ConvergenceVerdict {
    const double d = distance(seq(n), seq(m));
    if (d >= epsilon) return {VerdictStatus::RefutedAt, n, d};
    worst = std::max(worst, d);
    return {VerdictStatus::ConfirmedUpTo, 0, 0.0};
  };

  const std::uint64_t span = n_max - n0 + 1;
  const bool exhaustive =
      span <= 4000000000ULL && span * (span - 1) / 2 <= pair_budget;
  if (exhaustive) {
    for (std::uint64_t n = n0; n < n_max; ++n) {
      for (std::uint64_t m = n + 1; m <= n_max; ++m) {
        const ConvergenceVerdict v = probe(n, m);
        if (v.refuted()) return v;
      }
    }
    return {VerdictStatus::ConfirmedUpTo, n_max, worst};
  }

  // Stratified sample: every adjacent pair (strided when even those exceed
  // half the budget), the extreme pair, plus seeded random far pairs. Far
  // pairs are where Cauchy failures typically show up first.
  const std::uint64_t diag_budget = std::max<std::uint64_t>(1, pair_budget / 2);
  const std::uint64_t stride = std::max<std::uint64_t>(1, (span - 1) / diag_budget);
  for (std::uint64_t n = n0; n < n_max; n += stride) {
    const ConvergenceVerdict v = probe(n, n + 1);
    if (v.refuted()) return v;
  }
  {
    const ConvergenceVerdict v = probe(n0, n_max);
    if (v.refuted()) return v;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> first(n0, n_max - 1);
  for (std::uint64_t i = 0; i < pair_budget - pair_budget / 2; ++i) {
    const std::uint64_t n = first(rng);
    const std::uint64_t m =
        std::uniform_int_distribution<std::uint64_t>(n + 1, n_max)(rng);
    const ConvergenceVerdict v = probe(n, m);
    if (v.refuted()) return v;
  }
  return {VerdictStatus::ConfirmedUpTo, n_max, worst};
}

CompletenessWitness completeness_witness(const Type2Sequence& seq,
                                         double epsilon, std::uint64_t n_max,
                                         std::uint64_t probe_start,
                                         const TailOptions& options) {
  require(epsilon > 0.0, "epsilon must be positive");
  require(n_max >= 2, "n_max must be >= 2");

  ConvergenceVerdict cauchy{VerdictStatus::Inconclusive, 0, 0.0};
  std::uint64_t start = 0;
  for (std::uint64_t candidate = 1; candidate <= n_max / 2; candidate *= 2) {
    cauchy = check_cauchy(seq, epsilon, candidate, n_max);
    if (cauchy.confirmed()) {
      start = candidate;
      break;
    }
  }
  if (start == 0) {
    // No start index confirms the Cauchy property; report the refutation.
    return {seq(n_max), cauchy, 0};
  }

  const Type2Interval limit =
      estimate_limit(seq, std::max<std::uint64_t>(probe_start, 8), options);
  const ConvergenceVerdict verdict =
      check_convergence(seq, limit, 2.0 * epsilon, start, n_max);
  return {limit, verdict, start};
}

}  // namespace t2i
