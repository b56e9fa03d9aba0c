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

#include "t2i/function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "t2i/metric.hpp"

namespace t2i {

namespace {

constexpr int kValidationGridPoints = 257;
constexpr int kSignSamples = 1024;

// Central difference with two Richardson levels on a decade ladder
// h = 1e-3 .. 1e-6, restricted to offsets that stay inside the domain.
// Accepts once successive extrapolations agree.
double finite_difference_derivative(const RealFn& f, double x,
                                    const RealInterval& domain,
                                    int component) {
  const double room = std::min(x - domain.lo, domain.hi - x);
  std::vector<double> extrapolated;
  for (double h = 1e-3; h >= 1e-6 / 2; h /= 10.0) {
    if (h > room) continue;
    auto central = [&](double step) {
      return (f(x + step) - f(x - step)) / (2.0 * step);
    };
    const double d0 = central(h);
    const double d1 = central(h / 2.0);
    const double d2 = central(h / 4.0);
    const double r1a = (4.0 * d1 - d0) / 3.0;
    const double r1b = (4.0 * d2 - d1) / 3.0;
    const double r2 = (16.0 * r1b - r1a) / 15.0;
    if (!std::isfinite(r2)) break;
    if (!extrapolated.empty()) {
      const double prev = extrapolated.back();
      if (std::fabs(r2 - prev) <= 1e-6 * std::max(1.0, std::fabs(r2))) {
        return r2;
      }
    }
    extrapolated.push_back(r2);
  }
  throw ComponentNotDifferentiable(component);
}

std::vector<double> probe_offsets(const ProbeOptions& options) {
  std::vector<double> offsets;
  for (double h = options.h_max; h >= options.h_min / 2; h /= 10.0) {
    offsets.push_back(h);
  }
  return offsets;
}

// One step of Richardson extrapolation for a decade ladder: with values
// v(h), v(h/10), ... carrying an O(h) error term, (10*v(h/10) - v(h)) / 9
// cancels it, leaving O(h^2). Exact values pass through unchanged.
std::vector<double> extrapolate_decade(const std::vector<double>& values) {
  std::vector<double> out;
  for (std::size_t k = 0; k + 1 < values.size(); ++k) {
    out.push_back((10.0 * values[k + 1] - values[k]) / 9.0);
  }
  return out;
}

// One-sided ladder values of a scalar function; empty entries where the
// probe left the domain or threw. Stability is judged on the extrapolated
// ladder: the last three entries must agree within tol.
struct SideProbe {
  std::vector<double> values;
  bool stable = false;
  double limit = 0.0;
};

SideProbe probe_side(const std::function<double(double)>& f, double x0,
                     double sign, const RealInterval& domain,
                     const ProbeOptions& options) {
  SideProbe side;
  for (double h : probe_offsets(options)) {
    const double x = x0 + sign * h;
    if (!domain.contains(x)) continue;
    double v;
    try {
      v = f(x);
    } catch (const Error&) {
      continue;
    }
    if (!std::isfinite(v)) continue;
    side.values.push_back(v);
  }
  const std::vector<double> refined = extrapolate_decade(side.values);
  const std::size_t k = refined.size();
  if (k >= 3) {
    const double g1 = std::fabs(refined[k - 1] - refined[k - 2]);
    const double g2 = std::fabs(refined[k - 2] - refined[k - 3]);
    if (g1 < options.tol && g2 < options.tol) {
      side.stable = true;
      side.limit = refined[k - 1];
    }
  }
  return side;
}

struct RealLimitProbe {
  enum class Outcome { Exists, SidesDisagree, Unstable };
  Outcome outcome = Outcome::Unstable;
  double value = 0.0;
};

RealLimitProbe real_limit(const std::function<double(double)>& f, double x0,
                          const RealInterval& domain,
                          const ProbeOptions& options) {
  const SideProbe right = probe_side(f, x0, 1.0, domain, options);
  const SideProbe left = probe_side(f, x0, -1.0, domain, options);
  RealLimitProbe out;
  if (right.stable && left.stable) {
    if (std::fabs(right.limit - left.limit) <= 2.0 * options.tol) {
      out.outcome = RealLimitProbe::Outcome::Exists;
      out.value = 0.5 * (right.limit + left.limit);
    } else {
      out.outcome = RealLimitProbe::Outcome::SidesDisagree;
      out.value = right.limit;
    }
    return out;
  }
  // One-sided domains: the available side speaks for the limit.
  const bool right_empty = right.values.empty();
  const bool left_empty = left.values.empty();
  if (right.stable && left_empty) {
    out.outcome = RealLimitProbe::Outcome::Exists;
    out.value = right.limit;
    return out;
  }
  if (left.stable && right_empty) {
    out.outcome = RealLimitProbe::Outcome::Exists;
    out.value = left.limit;
    return out;
  }
  if (!right.values.empty()) out.value = right.values.back();
  return out;
}

}  // namespace

Type2Function::Type2Function(std::array<RealFn, 4> components,
                             RealInterval domain)
    : components_(std::move(components)), domain_(domain) {
  if (!(domain_.lo <= domain_.hi)) {
    throw std::invalid_argument("domain must satisfy lo <= hi");
  }
  validate_on_grid();
}

Type2Function::Type2Function(std::array<RealFn, 4> components,
                             std::array<RealFn, 4> derivatives,
                             RealInterval domain)
    : components_(std::move(components)),
      derivatives_(std::move(derivatives)),
      has_derivatives_(true),
      domain_(domain) {
  if (!(domain_.lo <= domain_.hi)) {
    throw std::invalid_argument("domain must satisfy lo <= hi");
  }
  validate_on_grid();
}

void Type2Function::validate_on_grid() const {
  for (int k = 0; k < kValidationGridPoints; ++k) {
    const double x =
        domain_.lo + domain_.width() * k / (kValidationGridPoints - 1);
    std::array<double, 4> v;
    try {
      for (int i = 0; i < 4; ++i) {
        v[static_cast<std::size_t>(i)] = components_[static_cast<std::size_t>(i)](x);
      }
    } catch (const PointwiseOrderingViolation&) {
      throw;
    } catch (const Error&) {
      continue;  // grid point outside the function's effective domain
    }
    bool finite = true;
    for (double c : v) finite = finite && std::isfinite(c);
    if (!finite) continue;
    for (int i = 0; i < 3; ++i) {
      if (!(v[static_cast<std::size_t>(i)] <= v[static_cast<std::size_t>(i) + 1])) {
        throw PointwiseOrderingViolation(x, i);
      }
    }
  }
}

Type2Interval Type2Function::eval(double x) const {
  if (!domain_.contains(x)) throw OutOfDomain(x);
  std::array<double, 4> v;
  for (int i = 0; i < 4; ++i) {
    v[static_cast<std::size_t>(i)] = components_[static_cast<std::size_t>(i)](x);
  }
  for (double c : v) {
    if (!std::isfinite(c)) throw NonFiniteInput();
  }
  for (int i = 0; i < 3; ++i) {
    if (!(v[static_cast<std::size_t>(i)] <= v[static_cast<std::size_t>(i) + 1])) {
      throw PointwiseOrderingViolation(x, i);
    }
  }
  return Type2Interval::make(v[0], v[1], v[2], v[3]);
}

double Type2Function::component(int i, double x) const {
  return components_[static_cast<std::size_t>(i)](x);
}

double Type2Function::component_derivative(int i, double x) const {
  if (has_derivatives_) return derivatives_[static_cast<std::size_t>(i)](x);
  return finite_difference_derivative(components_[static_cast<std::size_t>(i)],
                                      x, domain_, i);
}

Type2Function ScaledFunction::induced() const {
  static constexpr int kMirror[4] = {3, 2, 1, 0};
  std::array<RealFn, 4> components;
  for (int i = 0; i < 4; ++i) {
    components[static_cast<std::size_t>(i)] = [c = scale, fn = f, i](double x) {
      const double v = fn(x);
      return v >= 0.0 ? v * c.component(i) : v * c.component(kMirror[i]);
    };
  }
  if (!f_prime) return Type2Function(components, domain);
  std::array<RealFn, 4> derivatives;
  for (int i = 0; i < 4; ++i) {
    derivatives[static_cast<std::size_t>(i)] = [c = scale, fn = f,
                                                dfn = f_prime, i](double x) {
      return fn(x) >= 0.0 ? dfn(x) * c.component(i)
                          : dfn(x) * c.component(kMirror[i]);
    };
  }
  return Type2Function(components, derivatives, domain);
}

std::string probe_status_name(ProbeStatus status) {
  switch (status) {
    case ProbeStatus::Confirmed: return "confirmed";
    case ProbeStatus::Refuted: return "refuted";
    case ProbeStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

LimitReport limit_estimate(const Type2Function& f, double x0,
                           const ProbeOptions& options) {
  LimitReport report;
  bool all_confirmed = true;
  for (int i = 0; i < 4; ++i) {
    auto component = [&f, i](double x) { return f.eval(x).component(i); };
    const RealLimitProbe probe = real_limit(component, x0, f.domain(), options);
    report.component_limits[static_cast<std::size_t>(i)] = probe.value;
    all_confirmed =
        all_confirmed && probe.outcome == RealLimitProbe::Outcome::Exists;
  }
  report.value =
      Type2Quad::of(report.component_limits[0], report.component_limits[1],
                    report.component_limits[2], report.component_limits[3]);
  report.status =
      all_confirmed ? ProbeStatus::Confirmed : ProbeStatus::Inconclusive;
  return report;
}

ProbeStatus is_continuous_at(const Type2Function& f, double x0, double epsilon,
                             const ProbeOptions& options) {
  if (!f.domain().contains(x0)) throw OutOfDomain(x0);
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  const Type2Interval base = f.eval(x0);

  bool metric_ok = true;
  bool component_ok = true;
  int probes = 0;
  for (double sign : {1.0, -1.0}) {
    for (double h : probe_offsets(options)) {
      const double x = x0 + sign * h;
      if (!f.domain().contains(x)) continue;
      Type2Interval value;
      try {
        value = f.eval(x);
      } catch (const Error&) {
        continue;
      }
      ++probes;
      if (!(distance(value, base) < epsilon)) metric_ok = false;
      for (int i = 0; i < 4; ++i) {
        if (!(std::fabs(value.component(i) - base.component(i)) < epsilon)) {
          component_ok = false;
        }
      }
    }
  }
  if (probes == 0) return ProbeStatus::Inconclusive;
  if (metric_ok != component_ok) {
    throw Error("continuity probes disagree between metric and components");
  }
  return metric_ok ? ProbeStatus::Confirmed : ProbeStatus::Refuted;
}

GhDifference gh_diff(const Type2Interval& a, const Type2Interval& b) {
  const double outer_lo = a.lower_lo() - b.lower_lo();
  const double outer_hi = a.upper_hi() - b.upper_hi();
  const double inner_lo = a.lower_hi() - b.lower_hi();
  const double inner_hi = a.upper_lo() - b.upper_lo();
  GhDifference out;
  out.value = Type2Quad::of(
      std::min(outer_lo, outer_hi), std::min(inner_lo, inner_hi),
      std::max(inner_lo, inner_hi), std::max(outer_lo, outer_hi));
  if (out.value.proper) {
    const Type2Interval c = out.value.to_interval();
    out.case_a = equals(add(b, c), a);
    out.case_b = equals(add(a, scalar_mul(-1.0, c)), b);
  }
  return out;
}

std::string derivative_form_name(DerivativeForm form) {
  switch (form) {
    case DerivativeForm::FirstForm: return "first";
    case DerivativeForm::SecondForm: return "second";
    case DerivativeForm::Both: return "both";
    case DerivativeForm::Neither: return "neither";
  }
  return "?";
}

AnalyticDerivative gh_derivative_analytic(const Type2Function& f, double x0) {
  if (!f.domain().contains(x0)) throw OutOfDomain(x0);
  AnalyticDerivative out;
  for (int i = 0; i < 4; ++i) {
    out.slopes[static_cast<std::size_t>(i)] = f.component_derivative(i, x0);
  }
  const auto& s = out.slopes;
  out.value = Type2Quad::of(std::min(s[0], s[3]), std::min(s[1], s[2]),
                            std::max(s[1], s[2]), std::max(s[0], s[3]));
  // The form patterns presuppose a valid Type-2 derivative, so an improper
  // quadruple classifies as Neither.
  const bool first = out.value.proper && out.value.q1 == s[0] &&
                     out.value.q2 == s[1] && out.value.q3 == s[2] &&
                     out.value.q4 == s[3];
  const bool second = out.value.proper && out.value.q1 == s[3] &&
                      out.value.q2 == s[2] && out.value.q3 == s[1] &&
                      out.value.q4 == s[0];
  out.form = first && second  ? DerivativeForm::Both
             : first          ? DerivativeForm::FirstForm
             : second         ? DerivativeForm::SecondForm
                              : DerivativeForm::Neither;
  return out;
}

NumericDerivative gh_derivative_numeric(const Type2Function& f, double x0,
                                        const ProbeOptions& options) {
  if (!f.domain().contains(x0)) throw OutOfDomain(x0);
  const Type2Interval base = f.eval(x0);

  struct QuadSide {
    std::vector<std::array<double, 4>> rungs;
    bool stable = false;
    std::array<double, 4> limit{};
    bool available = false;
  };
  auto probe = [&](double sign) {
    QuadSide side;
    for (double h : probe_offsets(options)) {
      const double x = x0 + sign * h;
      if (!f.domain().contains(x)) continue;
      side.available = true;
      try {
        const Type2Quad d = gh_diff(f.eval(x), base).value;
        const Type2Quad scaled = quad_scale(1.0 / (sign * h), d);
        side.rungs.push_back(scaled.values());
      } catch (const Error&) {
        continue;
      }
    }
    // Componentwise Richardson step, then the three-rung agreement test.
    std::vector<std::array<double, 4>> refined;
    for (std::size_t k = 0; k + 1 < side.rungs.size(); ++k) {
      std::array<double, 4> r;
      for (std::size_t i = 0; i < 4; ++i) {
        r[i] = (10.0 * side.rungs[k + 1][i] - side.rungs[k][i]) / 9.0;
      }
      refined.push_back(r);
    }
    const std::size_t k = refined.size();
    if (k >= 3) {
      double gap = 0.0;
      for (std::size_t i = 0; i < 4; ++i) {
        gap = std::max(gap, std::fabs(refined[k - 1][i] - refined[k - 2][i]));
        gap = std::max(gap, std::fabs(refined[k - 2][i] - refined[k - 3][i]));
      }
      if (gap < options.tol) {
        side.stable = true;
        side.limit = refined[k - 1];
      }
    }
    return side;
  };

  const QuadSide right = probe(1.0);
  const QuadSide left = probe(-1.0);

  NumericDerivative out;
  auto assemble = [](const std::array<double, 4>& v) {
    return Type2Quad::of(v[0], v[1], v[2], v[3]);
  };
  if (right.stable && left.stable) {
    double gap = 0.0;
    std::array<double, 4> mean{};
    for (std::size_t i = 0; i < 4; ++i) {
      gap = std::max(gap, std::fabs(right.limit[i] - left.limit[i]));
      mean[i] = 0.5 * (right.limit[i] + left.limit[i]);
    }
    out.side_gap = gap;
    out.value = assemble(mean);
    out.status = gap <= 2.0 * options.tol ? ProbeStatus::Confirmed
                                          : ProbeStatus::Inconclusive;
    return out;
  }
  if (right.stable && !left.available) {
    out.value = assemble(right.limit);
    out.status = ProbeStatus::Confirmed;
    return out;
  }
  if (left.stable && !right.available) {
    out.value = assemble(left.limit);
    out.status = ProbeStatus::Confirmed;
    return out;
  }
  if (right.stable) {
    out.value = assemble(right.limit);
  } else if (left.stable) {
    out.value = assemble(left.limit);
  } else if (!right.rungs.empty()) {
    out.value = assemble(right.rungs.back());
  } else if (!left.rungs.empty()) {
    out.value = assemble(left.rungs.back());
  }
  out.status = ProbeStatus::Inconclusive;
  return out;
}

Type2Interval scaled_derivative(const ScaledFunction& s, double x0) {
  if (!s.domain.contains(x0)) throw OutOfDomain(x0);
  bool seen_positive = false;
  bool seen_negative = false;
  for (int k = 0; k < kSignSamples; ++k) {
    const double x = s.domain.lo + s.domain.width() * k / (kSignSamples - 1);
    const double v = s.f(x);
    seen_positive = seen_positive || v > 0.0;
    seen_negative = seen_negative || v < 0.0;
  }
  if (seen_positive && seen_negative) throw SignChangeDetected();
  const double slope = s.f_prime
                           ? s.f_prime(x0)
                           : finite_difference_derivative(s.f, x0, s.domain, 0);
  return scalar_mul(slope, s.scale);
}

ScaledLimitReport classify_scaled_limit(const ScaledFunction& s, double x0,
                                        const ProbeOptions& options) {
  ScaledLimitReport report;
  const RealLimitProbe f_probe = real_limit(s.f, x0, s.domain, options);
  auto abs_f = [&fn = s.f](double x) { return std::fabs(fn(x)); };
  const RealLimitProbe abs_probe = real_limit(abs_f, x0, s.domain, options);

  if (f_probe.outcome == RealLimitProbe::Outcome::Exists) {
    report.case_a = true;
    report.f_limit = f_probe.value;
  }
  const bool symmetric = s.scale.lower_lo() == -s.scale.upper_hi() &&
                         s.scale.lower_hi() == -s.scale.upper_lo();
  if (abs_probe.outcome == RealLimitProbe::Outcome::Exists) {
    report.abs_f_limit = abs_probe.value;
    report.case_b = symmetric;
  }

  if (report.case_a) {
    report.value = scalar_mul(*report.f_limit, s.scale);
  } else if (report.case_b) {
    report.value = scalar_mul(std::max(0.0, *report.abs_f_limit), s.scale);
  }

  if (report.case_a || report.case_b) {
    report.status = ProbeStatus::Confirmed;
  } else if (f_probe.outcome == RealLimitProbe::Outcome::SidesDisagree &&
             abs_probe.outcome != RealLimitProbe::Outcome::Unstable) {
    report.status = ProbeStatus::Refuted;
  } else {
    report.status = ProbeStatus::Inconclusive;
  }
  return report;
}

}  // namespace t2i
