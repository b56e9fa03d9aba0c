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

#include <json.hpp>

#include "t2i/function.hpp"
#include "t2i/interval.hpp"
#include "t2i/metric.hpp"
#include "t2i/oracle.hpp"

// JSON encodings of the library's value and report types.
namespace t2i::jsonio {

using nlohmann::json;

// {"lower":[q1,q2],"upper":[q3,q4]}
json encode(const Type2Interval& value);
// Rejects malformed shapes with EvalError and invalid quadruples with the
// usual OrderingViolation / NonFiniteInput.
Type2Interval decode_interval(const json& j);

// {"values":[q1,q2,q3,q4],"proper":bool}
json encode(const Type2Quad& value);

// {"status":"confirmed_up_to","witness_index":N,"achieved_distance":d}
json encode(const ConvergenceVerdict& verdict);

json encode(const GhDifference& diff);
json encode(const AnalyticDerivative& derivative);
json encode(const NumericDerivative& derivative);
json encode(const LimitReport& report);

// {"op":"mul","violations":0,"n":10000,"seed":42,"coverage":[...],...}
json encode(const oracle::MembershipReport& report);
json encode(const oracle::FuzzReport& report);

}  // namespace t2i::jsonio
