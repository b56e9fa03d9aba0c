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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "t2i/function.hpp"
#include "t2i/interval.hpp"

// Expression language over reals, the variables x and n, and Type-2
// interval literals written [(a,b),(c,d)] whose elements may themselves be
// real expressions. Precedence: unary minus > * / > + -, left associative.
// Builtin calls (sin, cos, exp, abs, sqrt, pow) apply to real subexpressions
// only. ASCII and Unicode minus signs are both accepted on input.
namespace t2i::expr {

enum class BinOp { Add, Sub, Mul, Div };
enum class Builtin { Sin, Cos, Exp, Abs, Sqrt, Pow };

struct Node;
using NodePtr = std::unique_ptr<Node>;

struct Node {
  struct Real {
    double value;
  };
  struct Literal {
    std::array<NodePtr, 4> elems;
  };
  struct Var {
    char name;  // 'x' or 'n'
  };
  struct Unary {
    NodePtr operand;  // negation
  };
  struct Binary {
    BinOp op;
    NodePtr lhs;
    NodePtr rhs;
  };
  struct Call {
    Builtin fn;
    std::vector<NodePtr> args;
  };

  std::variant<Real, Literal, Var, Unary, Binary, Call> data;
};

// Throws SyntaxError with 1-based line:column; literals whose elements are
// all constant are validated immediately, so "[(2,1),(3,4)]" is rejected
// with OrderingViolation at parse time.
NodePtr parse(std::string_view source);

// Canonical text form; parses back to a structurally identical tree.
std::string render(const Node& node);

bool ast_equal(const Node& a, const Node& b);

// True when the expression mentions the variable.
bool references(const Node& node, char var);

using Value = std::variant<double, Type2Interval>;

struct Bindings {
  std::optional<double> x;
  std::optional<double> n;
};

// Bottom-up evaluation: real subtrees in real arithmetic, mixed real and
// Type-2 operands via scalar multiplication and promotion of reals to
// 1-degenerate intervals, Type-2 pairs via the interval operations.
// Division by a real checks for zero; builtins reject Type-2 arguments.
Value eval(const Node& node, const Bindings& bindings = {});

// As eval, but promotes a real result to a 1-degenerate interval.
Type2Interval eval_interval(const Node& node, const Bindings& bindings = {});

// The interval-valued function of x induced by the expression. A literal
// root contributes its four element expressions as the components; any other
// root is evaluated whole and projected. Real-valued expressions induce a
// 1-degenerate function.
Type2Function function_from_expr(std::shared_ptr<const Node> root,
                                 RealInterval domain);

}  // namespace t2i::expr
