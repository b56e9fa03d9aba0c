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

#include "t2i/json_io.hpp"

namespace t2i::jsonio {

json encode(const Type2Interval& value) {
  return json{{"lower", {value.lower_lo(), value.lower_hi()}},
              {"upper", {value.upper_lo(), value.upper_hi()}}};
}

Type2Interval decode_interval(const json& j) {
  if (!j.is_object() || !j.contains("lower") || !j.contains("upper")) {
    throw EvalError("expected {\"lower\":[q1,q2],\"upper\":[q3,q4]}");
  }
  const json& lower = j.at("lower");
  const json& upper = j.at("upper");
  if (!lower.is_array() || lower.size() != 2 || !upper.is_array() ||
      upper.size() != 2) {
    throw EvalError("\"lower\" and \"upper\" must be two-element arrays");
  }
  return Type2Interval::make(lower.at(0).get<double>(),
                             lower.at(1).get<double>(),
                             upper.at(0).get<double>(),
                             upper.at(1).get<double>());
}

json encode(const Type2Quad& value) {
  return json{{"values", {value.q1, value.q2, value.q3, value.q4}},
              {"proper", value.proper}};
}

json encode(const ConvergenceVerdict& verdict) {
  return json{{"status", verdict_status_name(verdict.status)},
              {"witness_index", verdict.witness_index},
              {"achieved_distance", verdict.achieved_distance}};
}

json encode(const GhDifference& diff) {
  json j = encode(diff.value);
  j["case_a"] = diff.case_a;
  j["case_b"] = diff.case_b;
  return j;
}

json encode(const AnalyticDerivative& derivative) {
  json j = encode(derivative.value);
  j["form"] = derivative_form_name(derivative.form);
  j["slopes"] = derivative.slopes;
  return j;
}

json encode(const NumericDerivative& derivative) {
  json j = encode(derivative.value);
  j["status"] = probe_status_name(derivative.status);
  j["side_gap"] = derivative.side_gap;
  return j;
}

json encode(const LimitReport& report) {
  json j = encode(report.value);
  j["status"] = probe_status_name(report.status);
  j["component_limits"] = report.component_limits;
  return j;
}

json encode(const oracle::MembershipReport& report) {
  return json{{"op", oracle::op_name(report.op)},
              {"n", report.n},
              {"seed", report.seed},
              {"violations", report.violations},
              {"claimed", encode(report.claimed)},
              {"achieved", report.achieved},
              {"coverage", report.coverage_gap},
              {"max_sampled_lower", report.max_sampled_lower},
              {"max_lower_member", report.max_lower_member}};
}

json encode(const oracle::FuzzReport& report) {
  json ops = json::array();
  for (const auto& op : report.per_op) {
    ops.push_back(json{{"op", oracle::op_name(op.op)},
                       {"pairs", op.pairs},
                       {"mismatches", op.mismatches},
                       {"membership_violations", op.membership_violations}});
  }
  return json{{"n", report.n},
              {"seed", report.seed},
              {"prng", "mt19937_64"},
              {"per_op", ops},
              {"pass", report.pass}};
}

}  // namespace t2i::jsonio
