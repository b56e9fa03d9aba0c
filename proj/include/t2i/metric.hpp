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

#include <cstdint>
#include <functional>
#include <string>

#include "t2i/interval.hpp"

namespace t2i {

// Extended Moore distance: the largest componentwise absolute difference.
// A metric on the set of Type-2 intervals.
double distance(const Type2Interval& x, const Type2Interval& y);

// Module of x: its distance to the zero interval, i.e. the largest
// componentwise absolute value.
double norm(const Type2Interval& x);

// A sequence of Type-2 intervals indexed from 1. The term callable must be
// pure — the same index always yields the same value — which makes every
// checker below safe to run concurrently.
class Type2Sequence {
 public:
  explicit Type2Sequence(std::function<Type2Interval(std::uint64_t)> term)
      : term_(std::move(term)) {}

  Type2Interval operator()(std::uint64_t n) const;

 private:
  std::function<Type2Interval(std::uint64_t)> term_;
};

enum class VerdictStatus { ConfirmedUpTo, RefutedAt, Inconclusive };

std::string verdict_status_name(VerdictStatus status);

// Finite-evidence verdict. A scan over finitely many indices can refute a
// tail claim outright but can only confirm it up to the horizon inspected;
// the status names keep that distinction explicit.
struct ConvergenceVerdict {
  VerdictStatus status = VerdictStatus::Inconclusive;
  // First violating index for RefutedAt; the horizon for ConfirmedUpTo.
  std::uint64_t witness_index = 0;
  // The violating distance for RefutedAt; the largest distance seen for
  // ConfirmedUpTo.
  double achieved_distance = 0.0;

  bool confirmed() const { return status == VerdictStatus::ConfirmedUpTo; }
  bool refuted() const { return status == VerdictStatus::RefutedAt; }
};

// Scans distance(seq(n), limit) for n in [n0, n_max]. Refutes at the first
// index with distance >= epsilon.
ConvergenceVerdict check_convergence(const Type2Sequence& seq,
                                     const Type2Interval& limit,
                                     double epsilon, std::uint64_t n0,
                                     std::uint64_t n_max);

struct TailOptions {
  double tol = 1e-9;       // stabilization tolerance, absolute
  int window = 8;          // probes that must agree consecutively
  int max_doublings = 48;  // ladder cap before giving up
};

// Estimates the limit componentwise from probes at geometrically spaced
// indices n_probe, 2*n_probe, 4*n_probe, ... Each component is accepted once
// the last `window` probes agree within `tol`; probes at adjacent indices
// (m and m+1) are compared as well, which catches parity oscillations that
// index doubling alone would alias away. Throws LimitNotApparent when a
// component fails to stabilize before the ladder cap. Requires n_probe >= 8.
Type2Interval estimate_limit(const Type2Sequence& seq, std::uint64_t n_probe,
                             const TailOptions& options = {});

// Checks distance(seq(n), seq(m)) < epsilon over pairs n0 <= n < m <= n_max.
// Exhaustive when the pair count fits in pair_budget; otherwise a
// deterministic stratified sample (all near-diagonal pairs plus seeded
// random far pairs) is used.
ConvergenceVerdict check_cauchy(const Type2Sequence& seq, double epsilon,
                                std::uint64_t n0, std::uint64_t n_max,
                                std::uint64_t pair_budget = 100000,
                                std::uint64_t seed = 0x7a11);

struct CompletenessWitness {
  Type2Interval limit;
  ConvergenceVerdict verdict;
  // The start index from which the Cauchy property was confirmed.
  std::uint64_t start_index = 0;
};

// Desk-scale enactment of completeness: searches for a start index from
// which the sequence is Cauchy at epsilon on [1, n_max], estimates the limit
// componentwise, and confirms convergence to it at 2*epsilon. The estimated
// limit is itself a valid Type-2 interval by construction.
CompletenessWitness completeness_witness(const Type2Sequence& seq,
                                         double epsilon, std::uint64_t n_max,
                                         std::uint64_t probe_start = 8,
                                         const TailOptions& options = {});

}  // namespace t2i
