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

#include "t2i/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <utility>

namespace t2i::expr {

namespace {

enum class TokenKind {
  Number,
  Ident,
  LBracket,
  RBracket,
  LParen,
  RParen,
  Comma,
  Plus,
  Minus,
  Star,
  Slash,
  End,
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  double number = 0.0;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view source) : source_(source) { advance(); }

  const Token& current() const { return current_; }

  void advance() {
    skip_whitespace();
    current_.line = line_;
    current_.column = column_;
    if (pos_ >= source_.size()) {
      current_.kind = TokenKind::End;
      current_.text.clear();
      return;
    }
    const char c = source_[pos_];
    switch (c) {
      case '[': return single(TokenKind::LBracket);
      case ']': return single(TokenKind::RBracket);
      case '(': return single(TokenKind::LParen);
      case ')': return single(TokenKind::RParen);
      case ',': return single(TokenKind::Comma);
      case '+': return single(TokenKind::Plus);
      case '-': return single(TokenKind::Minus);
      case '*': return single(TokenKind::Star);
      case '/': return single(TokenKind::Slash);
      default: break;
    }
    // U+2212 (minus sign) is accepted as '-'.
    if (static_cast<unsigned char>(c) == 0xe2 && pos_ + 2 < source_.size() &&
        static_cast<unsigned char>(source_[pos_ + 1]) == 0x88 &&
        static_cast<unsigned char>(source_[pos_ + 2]) == 0x92) {
      consume(3);
      current_.kind = TokenKind::Minus;
      current_.text = "-";
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return number();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      return ident();
    }
    throw SyntaxError(line_, column_,
                      "unexpected character '" + std::string(1, c) + "'");
  }

 private:
  void single(TokenKind kind) {
    current_.kind = kind;
    current_.text = std::string(1, source_[pos_]);
    consume(1);
  }

  void number() {
    const std::size_t start = pos_;
    while (pos_ < source_.size() &&
           (std::isdigit(static_cast<unsigned char>(source_[pos_])) ||
            source_[pos_] == '.')) {
      consume(1);
    }
    if (pos_ < source_.size() && (source_[pos_] == 'e' || source_[pos_] == 'E')) {
      std::size_t peek = pos_ + 1;
      if (peek < source_.size() && (source_[peek] == '+' || source_[peek] == '-')) {
        ++peek;
      }
      if (peek < source_.size() &&
          std::isdigit(static_cast<unsigned char>(source_[peek]))) {
        consume(peek - pos_);
        while (pos_ < source_.size() &&
               std::isdigit(static_cast<unsigned char>(source_[pos_]))) {
          consume(1);
        }
      }
    }
    const std::string_view text = source_.substr(start, pos_ - start);
    double value = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
      throw SyntaxError(current_.line, current_.column,
                        "malformed number '" + std::string(text) + "'");
    }
    current_.kind = TokenKind::Number;
    current_.text = std::string(text);
    current_.number = value;
  }

  void ident() {
    const std::size_t start = pos_;
    while (pos_ < source_.size() &&
           std::isalpha(static_cast<unsigned char>(source_[pos_]))) {
      consume(1);
    }
    current_.kind = TokenKind::Ident;
    current_.text = std::string(source_.substr(start, pos_ - start));
  }

  void skip_whitespace() {
    while (pos_ < source_.size()) {
      const char c = source_[pos_];
      if (c == '\n') {
        ++line_;
        column_ = 1;
        ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        consume(1);
      } else {
        break;
      }
    }
  }

  void consume(std::size_t count) {
    pos_ += count;
    column_ += count;
  }

  std::string_view source_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  Token current_;
};

const std::map<std::string, Builtin, std::less<>>& builtins() {
  static const std::map<std::string, Builtin, std::less<>> table = {
      {"sin", Builtin::Sin}, {"cos", Builtin::Cos},   {"exp", Builtin::Exp},
      {"abs", Builtin::Abs}, {"sqrt", Builtin::Sqrt}, {"pow", Builtin::Pow},
  };
  return table;
}

const char* builtin_name(Builtin fn) {
  switch (fn) {
    case Builtin::Sin: return "sin";
    case Builtin::Cos: return "cos";
    case Builtin::Exp: return "exp";
    case Builtin::Abs: return "abs";
    case Builtin::Sqrt: return "sqrt";
    case Builtin::Pow: return "pow";
  }
  return "?";
}

// Constant value of a variable-free real subtree, if it is one. Subtrees
// that cannot be evaluated yet (variables, type mixes, division by zero)
// defer to evaluation time.
std::optional<double> fold_constant(const Node& node) {
  try {
    const Value v = eval(node, {});
    if (const double* d = std::get_if<double>(&v)) return *d;
    return std::nullopt;
  } catch (const Error&) {
    return std::nullopt;
  }
}

class Parser {
 public:
  explicit Parser(std::string_view source) : lexer_(source) {}

  NodePtr parse_all() {
    NodePtr expr = parse_expr();
    if (lexer_.current().kind != TokenKind::End) {
      throw error("expected end of input");
    }
    return expr;
  }

 private:
  SyntaxError error(const std::string& what) const {
    return SyntaxError(lexer_.current().line, lexer_.current().column, what);
  }

  void expect(TokenKind kind, const char* what) {
    if (lexer_.current().kind != kind) throw error(what);
    lexer_.advance();
  }

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    for (;;) {
      const TokenKind kind = lexer_.current().kind;
      if (kind != TokenKind::Plus && kind != TokenKind::Minus) return lhs;
      lexer_.advance();
      NodePtr rhs = parse_term();
      auto node = std::make_unique<Node>();
      node->data = Node::Binary{kind == TokenKind::Plus ? BinOp::Add : BinOp::Sub,
                                std::move(lhs), std::move(rhs)};
      lhs = std::move(node);
    }
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_unary();
    for (;;) {
      const TokenKind kind = lexer_.current().kind;
      if (kind != TokenKind::Star && kind != TokenKind::Slash) return lhs;
      lexer_.advance();
      NodePtr rhs = parse_unary();
      auto node = std::make_unique<Node>();
      node->data = Node::Binary{kind == TokenKind::Star ? BinOp::Mul : BinOp::Div,
                                std::move(lhs), std::move(rhs)};
      lhs = std::move(node);
    }
  }

  NodePtr parse_unary() {
    if (lexer_.current().kind == TokenKind::Minus) {
      lexer_.advance();
      NodePtr operand = parse_unary();
      // Fold a negated number literal so "-3" round-trips as a Real node.
      if (const auto* real = std::get_if<Node::Real>(&operand->data)) {
        auto node = std::make_unique<Node>();
        node->data = Node::Real{-real->value};
        return node;
      }
      auto node = std::make_unique<Node>();
      node->data = Node::Unary{std::move(operand)};
      return node;
    }
    return parse_primary();
  }

  NodePtr parse_primary() {
    const Token& token = lexer_.current();
    switch (token.kind) {
      case TokenKind::Number: {
        auto node = std::make_unique<Node>();
        node->data = Node::Real{token.number};
        lexer_.advance();
        return node;
      }
      case TokenKind::Ident:
        return parse_ident();
      case TokenKind::LParen: {
        lexer_.advance();
        NodePtr inner = parse_expr();
        expect(TokenKind::RParen, "expected ')'");
        return inner;
      }
      case TokenKind::LBracket:
        return parse_literal();
      default:
        throw error("expected a number, variable, call, '(' or '['");
    }
  }

  NodePtr parse_ident() {
    const std::string name = lexer_.current().text;
    lexer_.advance();
    if (name == "x" || name == "n") {
      auto node = std::make_unique<Node>();
      node->data = Node::Var{name[0]};
      return node;
    }
    const auto it = builtins().find(name);
    if (it == builtins().end()) {
      throw error("unknown identifier '" + name + "'");
    }
    expect(TokenKind::LParen, "expected '(' after function name");
    std::vector<NodePtr> args;
    args.push_back(parse_expr());
    while (lexer_.current().kind == TokenKind::Comma) {
      lexer_.advance();
      args.push_back(parse_expr());
    }
    expect(TokenKind::RParen, "expected ')'");
    const std::size_t expected = it->second == Builtin::Pow ? 2 : 1;
    if (args.size() != expected) {
      throw error(std::string(builtin_name(it->second)) + " takes " +
                  std::to_string(expected) + " argument(s)");
    }
    auto node = std::make_unique<Node>();
    node->data = Node::Call{it->second, std::move(args)};
    return node;
  }

  NodePtr parse_literal() {
    expect(TokenKind::LBracket, "expected '['");
    expect(TokenKind::LParen, "expected '('");
    std::array<NodePtr, 4> elems;
    elems[0] = parse_expr();
    expect(TokenKind::Comma, "expected ','");
    elems[1] = parse_expr();
    expect(TokenKind::RParen, "expected ')'");
    expect(TokenKind::Comma, "expected ','");
    expect(TokenKind::LParen, "expected '('");
    elems[2] = parse_expr();
    expect(TokenKind::Comma, "expected ','");
    elems[3] = parse_expr();
    expect(TokenKind::RParen, "expected ')'");
    expect(TokenKind::RBracket, "expected ']'");

    std::array<std::optional<double>, 4> folded;
    bool all_constant = true;
    for (std::size_t i = 0; i < 4; ++i) {
      folded[i] = fold_constant(*elems[i]);
      all_constant = all_constant && folded[i].has_value() &&
                     std::isfinite(*folded[i]);
    }
    if (all_constant) {
      // Rejects out-of-order constant literals at parse time.
      (void)Type2Interval::make(*folded[0], *folded[1], *folded[2], *folded[3]);
    }
    auto node = std::make_unique<Node>();
    node->data = Node::Literal{std::move(elems)};
    return node;
  }

  Lexer lexer_;
};

int precedence(const Node& node) {
  if (std::holds_alternative<Node::Binary>(node.data)) {
    const auto& bin = std::get<Node::Binary>(node.data);
    return bin.op == BinOp::Add || bin.op == BinOp::Sub ? 1 : 2;
  }
  if (std::holds_alternative<Node::Unary>(node.data)) return 3;
  return 4;
}

void render_into(const Node& node, std::string& out);

void render_child(const Node& child, int min_prec, std::string& out) {
  if (precedence(child) < min_prec) {
    out += '(';
    render_into(child, out);
    out += ')';
  } else {
    render_into(child, out);
  }
}

void render_into(const Node& node, std::string& out) {
  std::visit(
      [&](const auto& data) {
        using T = std::decay_t<decltype(data)>;
        if constexpr (std::is_same_v<T, Node::Real>) {
          out += format_double(data.value);
        } else if constexpr (std::is_same_v<T, Node::Literal>) {
          out += "[(";
          render_into(*data.elems[0], out);
          out += ',';
          render_into(*data.elems[1], out);
          out += "),(";
          render_into(*data.elems[2], out);
          out += ',';
          render_into(*data.elems[3], out);
          out += ")]";
        } else if constexpr (std::is_same_v<T, Node::Var>) {
          out += data.name;
        } else if constexpr (std::is_same_v<T, Node::Unary>) {
          out += '-';
          render_child(*data.operand, 3, out);
        } else if constexpr (std::is_same_v<T, Node::Binary>) {
          const int prec = data.op == BinOp::Add || data.op == BinOp::Sub ? 1 : 2;
          const char symbol = data.op == BinOp::Add   ? '+'
                              : data.op == BinOp::Sub ? '-'
                              : data.op == BinOp::Mul ? '*'
                                                      : '/';
          render_child(*data.lhs, prec, out);
          out += symbol;
          render_child(*data.rhs, prec + 1, out);
        } else if constexpr (std::is_same_v<T, Node::Call>) {
          out += builtin_name(data.fn);
          out += '(';
          for (std::size_t i = 0; i < data.args.size(); ++i) {
            if (i > 0) out += ',';
            render_into(*data.args[i], out);
          }
          out += ')';
        }
      },
      node.data);
}

Type2Interval promote(double value) {
  return Type2Interval::make(value, value, value, value);
}

Value apply_binary(BinOp op, const Value& lhs, const Value& rhs) {
  const double* lr = std::get_if<double>(&lhs);
  const double* rr = std::get_if<double>(&rhs);
  if (lr && rr) {
    switch (op) {
      case BinOp::Add: return *lr + *rr;
      case BinOp::Sub: return *lr - *rr;
      case BinOp::Mul: return *lr * *rr;
      case BinOp::Div:
        if (*rr == 0.0) throw ZeroInDenominator();
        return *lr / *rr;
    }
  }
  if (lr) {
    const auto& b = std::get<Type2Interval>(rhs);
    switch (op) {
      case BinOp::Add: return add(promote(*lr), b);
      case BinOp::Sub: return sub(promote(*lr), b);
      case BinOp::Mul: return scalar_mul(*lr, b);
      case BinOp::Div: return div(promote(*lr), b);
    }
  }
  const auto& a = std::get<Type2Interval>(lhs);
  if (rr) {
    switch (op) {
      case BinOp::Add: return add(a, promote(*rr));
      case BinOp::Sub: return sub(a, promote(*rr));
      case BinOp::Mul: return scalar_mul(*rr, a);
      case BinOp::Div:
        // Division by a real scales by its reciprocal.
        if (*rr == 0.0) throw ZeroInDenominator();
        return scalar_mul(1.0 / *rr, a);
    }
  }
  const auto& b = std::get<Type2Interval>(rhs);
  switch (op) {
    case BinOp::Add: return add(a, b);
    case BinOp::Sub: return sub(a, b);
    case BinOp::Mul: return mul(a, b);
    case BinOp::Div: return div(a, b);
  }
  throw EvalError("unreachable binary dispatch");
}

double apply_builtin(Builtin fn, const std::vector<double>& args) {
  switch (fn) {
    case Builtin::Sin: return std::sin(args[0]);
    case Builtin::Cos: return std::cos(args[0]);
    case Builtin::Exp: return std::exp(args[0]);
    case Builtin::Abs: return std::fabs(args[0]);
    case Builtin::Sqrt: return std::sqrt(args[0]);
    case Builtin::Pow: return std::pow(args[0], args[1]);
  }
  throw EvalError("unreachable builtin dispatch");
}

}  // namespace

NodePtr parse(std::string_view source) { return Parser(source).parse_all(); }

std::string render(const Node& node) {
  std::string out;
  render_into(node, out);
  return out;
}

bool ast_equal(const Node& a, const Node& b) {
  if (a.data.index() != b.data.index()) return false;
  if (const auto* real = std::get_if<Node::Real>(&a.data)) {
    const auto& other = std::get<Node::Real>(b.data);
    // Bit-level comparison so that -0 and 0 stay distinct.
    return real->value == other.value &&
           std::signbit(real->value) == std::signbit(other.value);
  }
  if (const auto* lit = std::get_if<Node::Literal>(&a.data)) {
    const auto& other = std::get<Node::Literal>(b.data);
    for (std::size_t i = 0; i < 4; ++i) {
      if (!ast_equal(*lit->elems[i], *other.elems[i])) return false;
    }
    return true;
  }
  if (const auto* var = std::get_if<Node::Var>(&a.data)) {
    return var->name == std::get<Node::Var>(b.data).name;
  }
  if (const auto* unary = std::get_if<Node::Unary>(&a.data)) {
    return ast_equal(*unary->operand, *std::get<Node::Unary>(b.data).operand);
  }
  if (const auto* bin = std::get_if<Node::Binary>(&a.data)) {
    const auto& other = std::get<Node::Binary>(b.data);
    return bin->op == other.op && ast_equal(*bin->lhs, *other.lhs) &&
           ast_equal(*bin->rhs, *other.rhs);
  }
  const auto& call = std::get<Node::Call>(a.data);
  const auto& other = std::get<Node::Call>(b.data);
  if (call.fn != other.fn || call.args.size() != other.args.size()) return false;
  for (std::size_t i = 0; i < call.args.size(); ++i) {
    if (!ast_equal(*call.args[i], *other.args[i])) return false;
  }
  return true;
}

bool references(const Node& node, char var) {
  return std::visit(
      [&](const auto& data) -> bool {
        using T = std::decay_t<decltype(data)>;
        if constexpr (std::is_same_v<T, Node::Var>) {
          return data.name == var;
        } else if constexpr (std::is_same_v<T, Node::Literal>) {
          for (const auto& elem : data.elems) {
            if (references(*elem, var)) return true;
          }
          return false;
        } else if constexpr (std::is_same_v<T, Node::Unary>) {
          return references(*data.operand, var);
        } else if constexpr (std::is_same_v<T, Node::Binary>) {
          return references(*data.lhs, var) || references(*data.rhs, var);
        } else if constexpr (std::is_same_v<T, Node::Call>) {
          for (const auto& arg : data.args) {
            if (references(*arg, var)) return true;
          }
          return false;
        } else {
          return false;
        }
      },
      node.data);
}

Value eval(const Node& node, const Bindings& bindings) {
  return std::visit(
      [&](const auto& data) -> Value {
        using T = std::decay_t<decltype(data)>;
        if constexpr (std::is_same_v<T, Node::Real>) {
          return data.value;
        } else if constexpr (std::is_same_v<T, Node::Literal>) {
          std::array<double, 4> q;
          for (std::size_t i = 0; i < 4; ++i) {
            const Value v = eval(*data.elems[i], bindings);
            const double* d = std::get_if<double>(&v);
            if (!d) {
              throw EvalError("literal elements must be real-valued");
            }
            q[i] = *d;
          }
          return Type2Interval::make(q[0], q[1], q[2], q[3]);
        } else if constexpr (std::is_same_v<T, Node::Var>) {
          const std::optional<double>& bound =
              data.name == 'x' ? bindings.x : bindings.n;
          if (!bound) {
            throw EvalError("variable '" + std::string(1, data.name) +
                            "' is unbound");
          }
          return *bound;
        } else if constexpr (std::is_same_v<T, Node::Unary>) {
          const Value v = eval(*data.operand, bindings);
          if (const double* d = std::get_if<double>(&v)) return -*d;
          return scalar_mul(-1.0, std::get<Type2Interval>(v));
        } else if constexpr (std::is_same_v<T, Node::Binary>) {
          return apply_binary(data.op, eval(*data.lhs, bindings),
                              eval(*data.rhs, bindings));
        } else {
          std::vector<double> args;
          args.reserve(data.args.size());
          for (const auto& arg : data.args) {
            const Value v = eval(*arg, bindings);
            const double* d = std::get_if<double>(&v);
            if (!d) {
              throw EvalError(std::string(builtin_name(data.fn)) +
                              " takes real arguments only");
            }
            args.push_back(*d);
          }
          return apply_builtin(data.fn, args);
        }
      },
      node.data);
}

Type2Interval eval_interval(const Node& node, const Bindings& bindings) {
  const Value v = eval(node, bindings);
  if (const double* d = std::get_if<double>(&v)) return promote(*d);
  return std::get<Type2Interval>(v);
}

Type2Function function_from_expr(std::shared_ptr<const Node> root,
                                 RealInterval domain) {
  std::array<RealFn, 4> components;
  if (const auto* literal = std::get_if<Node::Literal>(&root->data)) {
    for (std::size_t i = 0; i < 4; ++i) {
      const Node* elem = literal->elems[i].get();
      components[i] = [root, elem](double x) {
        Bindings bindings;
        bindings.x = x;
        const Value v = eval(*elem, bindings);
        const double* d = std::get_if<double>(&v);
        if (!d) throw EvalError("literal elements must be real-valued");
        return *d;
      };
    }
  } else {
    for (std::size_t i = 0; i < 4; ++i) {
      components[i] = [root, i](double x) {
        Bindings bindings;
        bindings.x = x;
        try {
          const Value v = eval(*root, bindings);
          if (const double* d = std::get_if<double>(&v)) return *d;
          return std::get<Type2Interval>(v).component(static_cast<int>(i));
        } catch (const OrderingViolation& violation) {
          throw PointwiseOrderingViolation(x, violation.pair());
        }
      };
    }
  }
  return Type2Function(std::move(components), domain);
}

}  // namespace t2i::expr
