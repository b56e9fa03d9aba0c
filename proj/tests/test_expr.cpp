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

#include <doctest.h>

#include <memory>
#include <random>
#include <string>

#include "support.hpp"
#include "t2i/expr.hpp"
#include "t2i/function.hpp"
#include "t2i/interval.hpp"

using t2i::Type2Interval;
using t2i::expr::Bindings;
using t2i::expr::Node;
using t2i::expr::NodePtr;
using t2i::expr::Value;

namespace {

Type2Interval iv(double q1, double q2, double q3, double q4) {
  return Type2Interval::make(q1, q2, q3, q4);
}

Type2Interval as_interval(const Value& v) {
  REQUIRE(std::holds_alternative<Type2Interval>(v));
  return std::get<Type2Interval>(v);
}

double as_real(const Value& v) {
  REQUIRE(std::holds_alternative<double>(v));
  return std::get<double>(v);
}

// Random well-typed expression trees for the round-trip property.
NodePtr random_real_expr(std::mt19937_64& rng, int depth);

NodePtr make_real(double v) {
  auto node = std::make_unique<Node>();
  node->data = Node::Real{v};
  return node;
}

NodePtr random_real_expr(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 5);
  std::uniform_int_distribution<int> small(-20, 20);
  switch (pick(rng)) {
    case 0:
      return make_real(small(rng) / 4.0);
    case 1: {
      auto node = std::make_unique<Node>();
      node->data = Node::Var{'x'};
      return node;
    }
    case 2: {
      auto node = std::make_unique<Node>();
      node->data = Node::Unary{random_real_expr(rng, depth - 1)};
      if (std::holds_alternative<Node::Real>(
              std::get<Node::Unary>(node->data).operand->data)) {
        // The parser folds a negated number; generate the folded form.
        const double v =
            std::get<Node::Real>(std::get<Node::Unary>(node->data).operand->data)
                .value;
        return make_real(-v);
      }
      return node;
    }
    case 3: {
      auto node = std::make_unique<Node>();
      std::uniform_int_distribution<int> op(0, 3);
      node->data = Node::Binary{static_cast<t2i::expr::BinOp>(op(rng)),
                                random_real_expr(rng, depth - 1),
                                random_real_expr(rng, depth - 1)};
      return node;
    }
    case 4: {
      auto node = std::make_unique<Node>();
      std::vector<NodePtr> args;
      args.push_back(random_real_expr(rng, depth - 1));
      std::uniform_int_distribution<int> fn(0, 4);  // skip pow here
      node->data = Node::Call{static_cast<t2i::expr::Builtin>(fn(rng)),
                              std::move(args)};
      return node;
    }
    default: {
      auto node = std::make_unique<Node>();
      std::vector<NodePtr> args;
      args.push_back(random_real_expr(rng, depth - 1));
      args.push_back(random_real_expr(rng, depth - 1));
      node->data = Node::Call{t2i::expr::Builtin::Pow, std::move(args)};
      return node;
    }
  }
}

NodePtr random_any_expr(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, 2);
  if (depth <= 0 || pick(rng) == 0) {
    // A literal with real-expression elements, kept ordered by offsets.
    auto node = std::make_unique<Node>();
    std::array<NodePtr, 4> elems;
    NodePtr base = random_real_expr(rng, 1);
    for (int i = 0; i < 4; ++i) {
      auto sum = std::make_unique<Node>();
      sum->data = Node::Binary{t2i::expr::BinOp::Add,
                               t2i::expr::parse(t2i::expr::render(*base)),
                               make_real(10.0 * i)};
      elems[static_cast<std::size_t>(i)] = std::move(sum);
    }
    node->data = Node::Literal{std::move(elems)};
    return node;
  }
  auto node = std::make_unique<Node>();
  std::uniform_int_distribution<int> op(0, 3);
  const auto tag = static_cast<t2i::expr::BinOp>(op(rng));
  if (pick(rng) == 1) {
    node->data = Node::Binary{tag, random_any_expr(rng, depth - 1),
                              random_real_expr(rng, depth - 1)};
  } else {
    node->data = Node::Binary{tag, random_real_expr(rng, depth - 1),
                              random_any_expr(rng, depth - 1)};
  }
  return node;
}

}  // namespace

TEST_CASE("parsing shapes") {
  const NodePtr product = t2i::expr::parse("[(-4,-1),(2,5)] * [(-6,-3),(-1,3)]");
  const auto* bin = std::get_if<Node::Binary>(&product->data);
  REQUIRE(bin != nullptr);
  CHECK(bin->op == t2i::expr::BinOp::Mul);
  CHECK(std::holds_alternative<Node::Literal>(bin->lhs->data));
  CHECK(std::holds_alternative<Node::Literal>(bin->rhs->data));

  const NodePtr three = t2i::expr::parse("((3))");
  const auto* real = std::get_if<Node::Real>(&three->data);
  REQUIRE(real != nullptr);
  CHECK(real->value == 3.0);
}

TEST_CASE("constant literals are validated at parse time") {
  CHECK_THROWS_AS(t2i::expr::parse("[(2,1),(3,4)]"), t2i::OrderingViolation);
  // Elements mentioning x cannot be checked until evaluation.
  CHECK_NOTHROW(t2i::expr::parse("[(x,x-1),(3,4)]"));
}

TEST_CASE("syntax errors carry positions") {
  try {
    t2i::expr::parse("1 + * 2");
    FAIL("expected a syntax error");
  } catch (const t2i::SyntaxError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(t2i::expr::parse("foo(3)"), t2i::SyntaxError);
  CHECK_THROWS_AS(t2i::expr::parse("(1"), t2i::SyntaxError);
  CHECK_THROWS_AS(t2i::expr::parse("pow(2)"), t2i::SyntaxError);
  CHECK_THROWS_AS(t2i::expr::parse(""), t2i::SyntaxError);
  CHECK_THROWS_AS(t2i::expr::parse("1 2"), t2i::SyntaxError);
}

TEST_CASE("unicode minus is accepted") {
  const NodePtr a = t2i::expr::parse("[(−4,−1),(2,5)]");
  const NodePtr b = t2i::expr::parse("[(-4,-1),(2,5)]");
  CHECK(t2i::expr::ast_equal(*a, *b));
  CHECK(as_interval(t2i::expr::eval(*a)) == iv(-4, -1, 2, 5));
}

TEST_CASE("evaluation of worked examples") {
  CHECK(as_interval(t2i::expr::eval(
            *t2i::expr::parse("[(-5,-2),(-1,3)] + [(-3,1),(3,6)]"))) ==
        iv(-8, -1, 2, 9));
  CHECK(as_interval(t2i::expr::eval(
            *t2i::expr::parse("[(-5,-2),(-1,3)] - [(-3,1),(3,6)]"))) ==
        iv(-11, -5, -2, 6));
  CHECK(as_interval(t2i::expr::eval(*t2i::expr::parse("2 * [(-4,-1),(2,5)]")))
        == iv(-8, -2, 4, 10));
  CHECK(as_interval(t2i::expr::eval(*t2i::expr::parse("-2 * [(-4,-1),(2,5)]")))
        == iv(-10, -4, 2, 8));
  CHECK(as_interval(t2i::expr::eval(
            *t2i::expr::parse("[(-4,-1),(2,5)] * [(-6,-3),(-1,3)]"))) ==
        iv(-30, -6, 3, 24));
  CHECK(as_interval(t2i::expr::eval(
            *t2i::expr::parse("[(-2,-1),(1,3)] / [(1,2),(3,4)]"))) ==
        iv(-2, -0.5, 0.5, 3));

  Bindings at_zero;
  at_zero.x = 0.0;
  CHECK(as_interval(t2i::expr::eval(
            *t2i::expr::parse("[(x-1,x),(x+1,x+2)]"), at_zero)) ==
        iv(-1, 0, 1, 2));
}

TEST_CASE("real arithmetic and precedence") {
  CHECK(as_real(t2i::expr::eval(*t2i::expr::parse("2 + 3 * 4"))) == 14.0);
  CHECK(as_real(t2i::expr::eval(*t2i::expr::parse("(2 + 3) * 4"))) == 20.0);
  CHECK(as_real(t2i::expr::eval(*t2i::expr::parse("2 - 3 - 4"))) == -5.0);
  CHECK(as_real(t2i::expr::eval(*t2i::expr::parse("-2 - -3"))) == 1.0);
  CHECK(as_real(t2i::expr::eval(*t2i::expr::parse("16 / 4 / 2"))) == 2.0);
  CHECK(as_real(t2i::expr::eval(*t2i::expr::parse("pow(2, 10)"))) == 1024.0);
  CHECK(as_real(t2i::expr::eval(*t2i::expr::parse("abs(-3) + sqrt(4)"))) == 5.0);
}

TEST_CASE("mixed real and interval arithmetic") {
  // Division by a real scales by its reciprocal.
  CHECK(as_interval(t2i::expr::eval(*t2i::expr::parse("[(2,4),(6,8)] / 2"))) ==
        t2i::scalar_mul(0.5, iv(2, 4, 6, 8)));
  CHECK(as_interval(t2i::expr::eval(*t2i::expr::parse("1 + [(0,1),(2,3)]"))) ==
        iv(1, 2, 3, 4));
  CHECK(as_interval(t2i::expr::eval(*t2i::expr::parse("[(0,1),(2,3)] - 1"))) ==
        iv(-1, 0, 1, 2));
  CHECK(as_interval(t2i::expr::eval(*t2i::expr::parse("6 / [(1,2),(3,6)]"))) ==
        t2i::div(iv(6, 6, 6, 6), iv(1, 2, 3, 6)));
  CHECK(as_interval(t2i::expr::eval(*t2i::expr::parse("-[(1,2),(3,4)]"))) ==
        iv(-4, -3, -2, -1));
}

TEST_CASE("evaluation errors") {
  CHECK_THROWS_AS(t2i::expr::eval(*t2i::expr::parse("x + 1")), t2i::EvalError);
  CHECK_THROWS_AS(t2i::expr::eval(*t2i::expr::parse("sin([(1,1),(1,1)])")),
                  t2i::EvalError);
  CHECK_THROWS_AS(t2i::expr::eval(*t2i::expr::parse("1 / 0")),
                  t2i::ZeroInDenominator);
  CHECK_THROWS_AS(t2i::expr::eval(*t2i::expr::parse("[(1,2),(3,4)] / 0")),
                  t2i::ZeroInDenominator);
  CHECK_THROWS_AS(
      t2i::expr::eval(*t2i::expr::parse("[(1,2),(3,4)] / [(-1,0),(1,2)]")),
      t2i::ZeroInDenominator);

  Bindings at_two;
  at_two.x = 2.0;
  CHECK_THROWS_AS(
      t2i::expr::eval(*t2i::expr::parse("[(x,x-1),(3,4)]"), at_two),
      t2i::OrderingViolation);
}

TEST_CASE("expression evaluation matches direct library composition") {
  const Type2Interval a = iv(-5, -2, -1, 3);
  const Type2Interval b = iv(-3, 1, 3, 6);
  const Type2Interval c = iv(1, 2, 3, 4);
  const Value v = t2i::expr::eval(*t2i::expr::parse(
      "([(-5,-2),(-1,3)] + [(-3,1),(3,6)]) * [(1,2),(3,4)] - [(-5,-2),(-1,3)]"));
  CHECK(as_interval(v) == t2i::sub(t2i::mul(t2i::add(a, b), c), a));
}

TEST_CASE("variable n works like x") {
  Bindings at;
  at.n = 4.0;
  CHECK(as_real(t2i::expr::eval(*t2i::expr::parse("1/n"), at)) == 0.25);
  CHECK(t2i::expr::references(*t2i::expr::parse("1/n"), 'n'));
  CHECK_FALSE(t2i::expr::references(*t2i::expr::parse("1/n"), 'x'));
}

TEST_CASE("render parses back to an identical tree") {
  for (const char* source : {
           "[(-5,-2),(-1,3)] + [(-3,1),(3,6)]",
           "2 * [(-4,-1),(2,5)]",
           "[(x-1,x),(x+1,x+2)]",
           "1 - 2 - 3",
           "1 - (2 - 3)",
           "2 * (3 + 4) / 5",
           "-(x + 1)",
           "pow(x, 2) + sin(x) * cos(x)",
           "[(1,2),(3,4)] / x",
       }) {
    const NodePtr parsed = t2i::expr::parse(source);
    const std::string rendered = t2i::expr::render(*parsed);
    const NodePtr reparsed = t2i::expr::parse(rendered);
    CHECK_MESSAGE(t2i::expr::ast_equal(*parsed, *reparsed), source);
    CHECK(t2i::expr::render(*reparsed) == rendered);
  }
}

TEST_CASE("render round-trips on generated trees") {
  std::mt19937_64 rng(15001);
  for (int k = 0; k < 300; ++k) {
    const NodePtr tree = random_any_expr(rng, 3);
    const std::string rendered = t2i::expr::render(*tree);
    const NodePtr reparsed = t2i::expr::parse(rendered);
    CHECK_MESSAGE(t2i::expr::ast_equal(*tree, *reparsed), rendered);
  }
  for (int k = 0; k < 300; ++k) {
    const NodePtr tree = random_real_expr(rng, 4);
    const std::string rendered = t2i::expr::render(*tree);
    const NodePtr reparsed = t2i::expr::parse(rendered);
    CHECK_MESSAGE(t2i::expr::ast_equal(*tree, *reparsed), rendered);
  }
}

TEST_CASE("functions induced by expressions") {
  std::shared_ptr<const Node> bands = t2i::expr::parse("[(x-1,x),(x+1,x+2)]");
  const t2i::Type2Function f =
      t2i::expr::function_from_expr(bands, {-5.0, 5.0});
  CHECK(f.eval(0.0) == iv(-1, 0, 1, 2));
  CHECK(f.eval(2.0) == iv(1, 2, 3, 4));

  // Scaled form through full evaluation and projection.
  std::shared_ptr<const Node> scaled = t2i::expr::parse("[(1,2),(3,4)] * (x*x)");
  const t2i::Type2Function g =
      t2i::expr::function_from_expr(scaled, {0.5, 3.0});
  CHECK(g.eval(2.0) == iv(4, 8, 12, 16));

  // A real-valued expression induces a 1-degenerate function.
  std::shared_ptr<const Node> plain = t2i::expr::parse("x + 1");
  const t2i::Type2Function h = t2i::expr::function_from_expr(plain, {0.0, 1.0});
  CHECK(h.eval(0.5) == iv(1.5, 1.5, 1.5, 1.5));

  // Ordering violations surface with the offending x.
  std::shared_ptr<const Node> bad = t2i::expr::parse("[(x,x-1),(3,4)]");
  CHECK_THROWS_AS(t2i::expr::function_from_expr(bad, {1.0, 2.0}),
                  t2i::PointwiseOrderingViolation);
}
