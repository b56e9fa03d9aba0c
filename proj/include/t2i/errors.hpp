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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace t2i {

// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A quadruple failed q1 <= q2 <= q3 <= q4. `pair` is the index (0..2) of the
// first adjacent pair in violation.
class OrderingViolation : public Error {
 public:
  OrderingViolation(int pair, double lhs, double rhs)
      : Error("ordering violation at pair (q" + std::to_string(pair + 1) +
              ", q" + std::to_string(pair + 2) + "): " + std::to_string(lhs) +
              " > " + std::to_string(rhs)),
        pair_(pair) {}
  int pair() const noexcept { return pair_; }

 private:
  int pair_;
};

class NonFiniteInput : public Error {
 public:
  NonFiniteInput() : Error("non-finite input component") {}
};

class NonFiniteResult : public Error {
 public:
  NonFiniteResult() : Error("operation overflowed to a non-finite value") {}
};

class ZeroInDenominator : public Error {
 public:
  ZeroInDenominator() : Error("zero lies in the denominator's outer hull") {}
};

class OutOfDomain : public Error {
 public:
  explicit OutOfDomain(double x)
      : Error("point " + std::to_string(x) + " is outside the domain") {}
};

// An interval-valued function's components came back out of order at some x.
class PointwiseOrderingViolation : public Error {
 public:
  PointwiseOrderingViolation(double x, int pair)
      : Error("component ordering violated at x = " + std::to_string(x) +
              ", pair (" + std::to_string(pair + 1) + ", " +
              std::to_string(pair + 2) + ")"),
        x_(x),
        pair_(pair) {}
  double x() const noexcept { return x_; }
  int pair() const noexcept { return pair_; }

 private:
  double x_;
  int pair_;
};

// A sequence tail failed the stabilization test, so no limit can be reported.
class LimitNotApparent : public Error {
 public:
  explicit LimitNotApparent(int component)
      : Error("component " + std::to_string(component + 1) +
              " shows no apparent limit"),
        component_(component) {}
  int component() const noexcept { return component_; }

 private:
  int component_;
};

class ComponentNotDifferentiable : public Error {
 public:
  explicit ComponentNotDifferentiable(int component)
      : Error("finite-difference probes for component " +
              std::to_string(component + 1) + " did not stabilize"),
        component_(component) {}
  int component() const noexcept { return component_; }

 private:
  int component_;
};

class SignChangeDetected : public Error {
 public:
  SignChangeDetected()
      : Error("scalar factor changes sign on the sampled domain") {}
};

// Expression evaluation error: unbound variable, type mismatch, and the like.
class EvalError : public Error {
 public:
  using Error::Error;
};

// Parse error with 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& what)
      : Error("syntax error at " + std::to_string(line) + ":" +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace t2i
