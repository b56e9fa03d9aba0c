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
#include <functional>
#include <optional>
#include <string>

#include "t2i/interval.hpp"

namespace t2i {

using RealFn = std::function<double(double)>;

struct RealInterval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x) const { return lo <= x && x <= hi; }
  double width() const { return hi - lo; }
};

// A Type-2 interval-valued function of a real variable: four real component
// functions on a shared domain, ordered pointwise. The ordering is sampled
// on a 257-point grid at construction (full verification being impossible
// for black-box components) and asserted again on every evaluation.
// Component functions must be pure; instances are immutable and can be
// shared across threads.
class Type2Function {
 public:
  Type2Function(std::array<RealFn, 4> components, RealInterval domain);
  Type2Function(std::array<RealFn, 4> components,
                std::array<RealFn, 4> derivatives, RealInterval domain);

  // Throws OutOfDomain or PointwiseOrderingViolation.
  Type2Interval eval(double x) const;

  double component(int i, double x) const;
  bool has_derivatives() const { return has_derivatives_; }
  // Supplied derivative when present, otherwise a central finite difference
  // with Richardson extrapolation; throws ComponentNotDifferentiable if the
  // finite-difference ladder fails to stabilize.
  double component_derivative(int i, double x) const;

  const RealInterval& domain() const { return domain_; }

 private:
  void validate_on_grid() const;

  std::array<RealFn, 4> components_;
  std::array<RealFn, 4> derivatives_;
  bool has_derivatives_ = false;
  RealInterval domain_;
};

// F(x) = C * f(x), scaled pointwise by the sign rule of scalar
// multiplication. The special form behind the sharper limit, continuity and
// differentiation statements.
struct ScaledFunction {
  Type2Interval scale;  // C
  RealFn f;
  RealFn f_prime;  // optional; empty when absent
  RealInterval domain;

  Type2Function induced() const;
};

enum class ProbeStatus { Confirmed, Refuted, Inconclusive };

std::string probe_status_name(ProbeStatus status);

struct ProbeOptions {
  double tol = 1e-6;   // one-sided ladder stabilization tolerance, absolute
  double h_max = 1e-2; // largest probe offset
  double h_min = 1e-8; // smallest probe offset; rungs step down by decades
};

// Numeric evidence for a two-sided limit at x0 (x0 itself is never
// evaluated). Each component is probed on a shrinking offset ladder from
// both available sides and the ladder is Richardson-extrapolated once; a
// side stabilizes when its last three extrapolated rungs agree within tol,
// and the limit is Confirmed when both sides stabilize and match within
// 2*tol.
struct LimitReport {
  Type2Quad value;  // assembled component limits (best estimates otherwise)
  std::array<double, 4> component_limits{};
  ProbeStatus status = ProbeStatus::Inconclusive;
};

LimitReport limit_estimate(const Type2Function& f, double x0,
                           const ProbeOptions& options = {});

// Probe evidence for continuity at x0 for the given epsilon: confirmed when
// every ladder evaluation stays within epsilon of f(x0), both through the
// metric and through each component separately (the two routes are computed
// independently and must agree).
ProbeStatus is_continuous_at(const Type2Function& f, double x0, double epsilon,
                             const ProbeOptions& options = {});

// Generalized Hukuhara difference. The closed form can produce quadruples
// that violate the Type-2 ordering; such results are returned with
// proper=false rather than being rejected or re-sorted. When the result is
// proper, case_a reports whether b + c == a holds exactly and case_b whether
// a + (-1)c == b does. (A proper result need not satisfy either equation.)
struct GhDifference {
  Type2Quad value;
  bool case_a = false;
  bool case_b = false;
};

GhDifference gh_diff(const Type2Interval& a, const Type2Interval& b);

enum class DerivativeForm { FirstForm, SecondForm, Both, Neither };

std::string derivative_form_name(DerivativeForm form);

// Derivative assembled from the four component derivatives: outer pair from
// the extreme outer slopes, inner pair from the extreme inner slopes. May be
// improper, exactly like gh_diff.
struct AnalyticDerivative {
  Type2Quad value;
  DerivativeForm form = DerivativeForm::Neither;
  std::array<double, 4> slopes{};  // the component derivatives at x0
};

AnalyticDerivative gh_derivative_analytic(const Type2Function& f, double x0);

// Derivative as the limit of the scaled gH-difference quotient
// (1/h) * (f(x0+h) gh- f(x0)) over shrinking h of both signs. The default
// ladder floor is coarser than for plain limits: quotient rounding noise
// grows like 1/h, so offsets below about 1e-6 drown the stabilization test.
struct NumericDerivative {
  Type2Quad value;
  ProbeStatus status = ProbeStatus::Inconclusive;
  double side_gap = 0.0;  // largest componentwise gap between the two sides
};

NumericDerivative gh_derivative_numeric(
    const Type2Function& f, double x0,
    const ProbeOptions& options = {1e-6, 1e-2, 1e-6});

// Derivative of C * f(x) as C * f'(x0). Requires f to keep one sign on the
// (sampled) domain; throws SignChangeDetected otherwise.
Type2Interval scaled_derivative(const ScaledFunction& s, double x0);

// Dichotomy report for the limit of C * f(x) at x0: either f itself has a
// limit there (case a, limit C * lim f), or |f| has a limit and C is
// symmetric, meaning its lower bound interval is the negative of its upper
// (case b). Both can hold at once; neither means the scaled function has no
// limit at x0.
struct ScaledLimitReport {
  bool case_a = false;
  bool case_b = false;
  std::optional<double> f_limit;
  std::optional<double> abs_f_limit;
  std::optional<Type2Interval> value;  // limit of C*f when a case holds
  ProbeStatus status = ProbeStatus::Inconclusive;
};

ScaledLimitReport classify_scaled_limit(const ScaledFunction& s, double x0,
                                        const ProbeOptions& options = {});

}  // namespace t2i
