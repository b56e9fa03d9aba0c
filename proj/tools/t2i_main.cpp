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

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "t2i/expr.hpp"
#include "t2i/function.hpp"
#include "t2i/interval.hpp"
#include "t2i/json_io.hpp"
#include "t2i/metric.hpp"
#include "t2i/oracle.hpp"

namespace {

using t2i::Type2Interval;
using t2i::jsonio::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitMismatch = 2;

struct CliConfig {
  std::string format = "text";
  std::uint64_t seed = 42;
  double tol_limit = 1e-6;
  std::optional<double> at;
};

t2i::expr::Bindings bindings_from(const CliConfig& config,
                                  const t2i::expr::Node& node) {
  t2i::expr::Bindings bindings;
  const bool uses_x = t2i::expr::references(node, 'x');
  const bool uses_n = t2i::expr::references(node, 'n');
  if ((uses_x || uses_n) && !config.at) {
    throw t2i::EvalError("expression uses a variable; pass --at");
  }
  if (uses_x) bindings.x = config.at;
  if (uses_n) bindings.n = config.at;
  return bindings;
}

void print_value(const CliConfig& config, const t2i::expr::Value& value) {
  if (config.format == "json") {
    json j;
    if (const double* d = std::get_if<double>(&value)) {
      j["value"] = *d;
    } else {
      j["value"] = t2i::jsonio::encode(std::get<Type2Interval>(value));
    }
    std::cout << j.dump() << "\n";
    return;
  }
  if (const double* d = std::get_if<double>(&value)) {
    if (config.format == "csv") {
      std::cout << "value\n" << t2i::format_double(*d) << "\n";
    } else {
      std::cout << t2i::format_double(*d) << "\n";
    }
    return;
  }
  const Type2Interval& v = std::get<Type2Interval>(value);
  if (config.format == "csv") {
    std::cout << "lower_lo,lower_hi,upper_lo,upper_hi\n"
              << t2i::format_double(v.lower_lo()) << ","
              << t2i::format_double(v.lower_hi()) << ","
              << t2i::format_double(v.upper_lo()) << ","
              << t2i::format_double(v.upper_hi()) << "\n";
  } else {
    std::cout << t2i::to_string(v) << "\n";
  }
}

void print_scalar(const CliConfig& config, const char* key, double value) {
  if (config.format == "json") {
    std::cout << json{{key, value}}.dump() << "\n";
  } else if (config.format == "csv") {
    std::cout << key << "\n" << t2i::format_double(value) << "\n";
  } else {
    std::cout << t2i::format_double(value) << "\n";
  }
}

int run_eval(const CliConfig& config, const std::string& source) {
  const t2i::expr::NodePtr node = t2i::expr::parse(source);
  print_value(config, t2i::expr::eval(*node, bindings_from(config, *node)));
  return kExitOk;
}

int run_derive(const CliConfig& config, const std::string& source) {
  if (!config.at) throw t2i::EvalError("derive needs --at for the point");
  const double x0 = *config.at;
  std::shared_ptr<const t2i::expr::Node> node = t2i::expr::parse(source);
  if (t2i::expr::references(*node, 'n')) {
    throw t2i::EvalError("derive expects an expression in x");
  }
  const t2i::Type2Function fn = t2i::expr::function_from_expr(
      node, t2i::RealInterval{x0 - 0.5, x0 + 0.5});

  t2i::ProbeOptions options;
  options.tol = config.tol_limit;
  options.h_min = 1e-6;  // quotient ladder floor
  const t2i::AnalyticDerivative analytic = t2i::gh_derivative_analytic(fn, x0);
  const t2i::NumericDerivative numeric =
      t2i::gh_derivative_numeric(fn, x0, options);
  double agreement = 0.0;
  const auto a = analytic.value.values();
  const auto b = numeric.value.values();
  for (std::size_t i = 0; i < 4; ++i) {
    agreement = std::max(agreement, std::fabs(a[i] - b[i]));
  }

  if (config.format == "json") {
    json j{{"analytic", t2i::jsonio::encode(analytic)},
           {"numeric", t2i::jsonio::encode(numeric)},
           {"agreement", agreement}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "derivative: " << t2i::to_string(analytic.value) << "\n"
              << "proper: " << (analytic.value.proper ? "yes" : "no") << "\n"
              << "form: " << t2i::derivative_form_name(analytic.form) << "\n"
              << "numeric: " << t2i::to_string(numeric.value) << " ["
              << t2i::probe_status_name(numeric.status) << "]\n"
              << "agreement: " << t2i::format_double(agreement) << "\n";
  }
  return kExitOk;
}

int run_dist(const CliConfig& config, const std::string& source_a,
             const std::string& source_b) {
  const t2i::expr::NodePtr a = t2i::expr::parse(source_a);
  const t2i::expr::NodePtr b = t2i::expr::parse(source_b);
  const double d = t2i::distance(t2i::expr::eval_interval(*a),
                                 t2i::expr::eval_interval(*b));
  print_scalar(config, "distance", d);
  return kExitOk;
}

int run_norm(const CliConfig& config, const std::string& source) {
  const t2i::expr::NodePtr node = t2i::expr::parse(source);
  print_scalar(config, "norm", t2i::norm(t2i::expr::eval_interval(*node)));
  return kExitOk;
}

int run_ghdiff(const CliConfig& config, const std::string& source_a,
               const std::string& source_b) {
  const t2i::expr::NodePtr a = t2i::expr::parse(source_a);
  const t2i::expr::NodePtr b = t2i::expr::parse(source_b);
  const t2i::GhDifference diff =
      t2i::gh_diff(t2i::expr::eval_interval(*a), t2i::expr::eval_interval(*b));
  if (config.format == "json") {
    std::cout << t2i::jsonio::encode(diff).dump() << "\n";
  } else {
    std::cout << t2i::to_string(diff.value) << "\n"
              << "proper: " << (diff.value.proper ? "yes" : "no") << "\n"
              << "case (a) holds: " << (diff.case_a ? "yes" : "no") << "\n"
              << "case (b) holds: " << (diff.case_b ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int run_table(const std::string& source, double lo, double hi,
              std::uint64_t steps, const std::string& out_path) {
  if (!(steps >= 1)) throw t2i::EvalError("steps must be >= 1");
  if (!(lo < hi)) throw t2i::EvalError("need lo < hi");
  std::shared_ptr<const t2i::expr::Node> node = t2i::expr::parse(source);
  std::ofstream out(out_path);
  if (!out) throw t2i::Error("cannot open output file " + out_path);
  out << "x,lower_lo,lower_hi,upper_lo,upper_hi\n";
  for (std::uint64_t k = 0; k <= steps; ++k) {
    const double x =
        lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(steps);
    t2i::expr::Bindings bindings;
    bindings.x = x;
    Type2Interval value;
    try {
      value = t2i::expr::eval_interval(*node, bindings);
    } catch (const t2i::Error& e) {
      throw t2i::Error("evaluation failed at x = " + t2i::format_double(x) +
                       ": " + e.what());
    }
    out << t2i::format_double(x) << "," << t2i::format_double(value.lower_lo())
        << "," << t2i::format_double(value.lower_hi()) << ","
        << t2i::format_double(value.upper_lo()) << ","
        << t2i::format_double(value.upper_hi()) << "\n";
  }
  if (!out.flush()) throw t2i::Error("write failed for " + out_path);
  return kExitOk;
}

int run_check(const CliConfig& config, const std::string& op,
              std::uint64_t n) {
  using t2i::oracle::BinaryOpTag;
  std::vector<BinaryOpTag> ops;
  if (op == "add") {
    ops = {BinaryOpTag::Add};
  } else if (op == "sub") {
    ops = {BinaryOpTag::Sub};
  } else if (op == "mul") {
    ops = {BinaryOpTag::Mul};
  } else if (op == "div") {
    ops = {BinaryOpTag::Div};
  } else if (op == "all") {
    ops = {BinaryOpTag::Add, BinaryOpTag::Sub, BinaryOpTag::Mul,
           BinaryOpTag::Div};
  } else {
    throw t2i::EvalError("op must be one of add, sub, mul, div, all");
  }
  const t2i::oracle::FuzzReport report =
      t2i::oracle::fuzz_against_corners(ops, n, config.seed);
  std::cout << t2i::jsonio::encode(report).dump() << "\n";
  return report.pass ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Type-2 interval arithmetic and calculus"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig config;
  app.add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--seed", config.seed, "PRNG seed for check")
      ->capture_default_str();
  app.add_option("--tol-limit", config.tol_limit,
                 "Stabilization tolerance for derivative probes")
      ->capture_default_str();
  app.add_option("--at", config.at, "Value for the variable in an expression");

  std::string expr_a;
  std::string expr_b;
  double table_lo = 0.0;
  double table_hi = 1.0;
  std::uint64_t table_steps = 10;
  std::string table_out;
  std::string check_op = "all";
  std::uint64_t check_n = 1000;

  CLI::App* cmd_eval = app.add_subcommand("eval", "Evaluate an expression");
  cmd_eval->add_option("expr", expr_a, "Expression")->required();

  CLI::App* cmd_derive = app.add_subcommand(
      "derive", "Differentiate an interval-valued expression at --at");
  cmd_derive->add_option("expr", expr_a, "Expression in x")->required();

  CLI::App* cmd_dist =
      app.add_subcommand("dist", "Distance between two interval values");
  cmd_dist->add_option("expr_a", expr_a, "First expression")->required();
  cmd_dist->add_option("expr_b", expr_b, "Second expression")->required();

  CLI::App* cmd_norm = app.add_subcommand("norm", "Module of an interval value");
  cmd_norm->add_option("expr", expr_a, "Expression")->required();

  CLI::App* cmd_ghdiff = app.add_subcommand(
      "ghdiff", "Generalized Hukuhara difference of two interval values");
  cmd_ghdiff->add_option("expr_a", expr_a, "First expression")->required();
  cmd_ghdiff->add_option("expr_b", expr_b, "Second expression")->required();

  CLI::App* cmd_table =
      app.add_subcommand("table", "Tabulate an expression in x to CSV");
  cmd_table->add_option("expr", expr_a, "Expression in x")->required();
  cmd_table->add_option("lo", table_lo, "Grid start")->required();
  cmd_table->add_option("hi", table_hi, "Grid end")->required();
  cmd_table->add_option("steps", table_steps, "Grid steps")->required();
  cmd_table->add_option("out", table_out, "Output CSV path")->required();

  CLI::App* cmd_check = app.add_subcommand(
      "check", "Fuzz the closed-form operations against the corner oracle");
  cmd_check->add_option("op", check_op, "add, sub, mul, div or all");
  cmd_check->add_option("-n", check_n, "Pairs per operation")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (cmd_eval->parsed()) return run_eval(config, expr_a);
    if (cmd_derive->parsed()) return run_derive(config, expr_a);
    if (cmd_dist->parsed()) return run_dist(config, expr_a, expr_b);
    if (cmd_norm->parsed()) return run_norm(config, expr_a);
    if (cmd_ghdiff->parsed()) return run_ghdiff(config, expr_a, expr_b);
    if (cmd_table->parsed()) {
      return run_table(expr_a, table_lo, table_hi, table_steps, table_out);
    }
    if (cmd_check->parsed()) return run_check(config, check_op, check_n);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
