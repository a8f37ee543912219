#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>

#include "unc/error.hpp"
#include "unc/expr.hpp"

namespace unc {

ExprPtr Expr::constant(double v) { return std::make_shared<const Expr>(Expr{Constant{v}}); }
ExprPtr Expr::variable(std::string name) {
  return std::make_shared<const Expr>(Expr{Variable{std::move(name)}});
}
ExprPtr Expr::unary(UnaryFn fn, ExprPtr operand) {
  return std::make_shared<const Expr>(Expr{Unary{fn, std::move(operand)}});
}
ExprPtr Expr::binary(BinaryFn fn, ExprPtr lhs, ExprPtr rhs) {
  return std::make_shared<const Expr>(Expr{Binary{fn, std::move(lhs), std::move(rhs)}});
}

namespace {

std::string describe(const Token& t) { return "'" + t.text + "'"; }

class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : tokens_(tokens) {}

  ExprPtr run() {
    if (tokens_.empty()) throw ParseError(0, "expected expression, found end of input");
    ExprPtr e = expr();
    if (!done()) fail("end of input");
    return e;
  }

 private:
  ExprPtr expr() {
    ExprPtr lhs = term();
    while (is_op("+") || is_op("-")) {
      const BinaryFn fn = next().text == "+" ? BinaryFn::add : BinaryFn::sub;
      lhs = Expr::binary(fn, std::move(lhs), term());
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    while (is_op("*") || is_op("/")) {
      const BinaryFn fn = next().text == "*" ? BinaryFn::mul : BinaryFn::div;
      lhs = Expr::binary(fn, std::move(lhs), unary());
    }
    return lhs;
  }

  ExprPtr unary() {
    if (is_op("-")) {
      next();
      return Expr::unary(UnaryFn::neg, unary());
    }
    if (is_op("+")) {
      next();
      return unary();
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (is_op("^")) {
      next();
      return Expr::binary(BinaryFn::pow, std::move(base), unary());
    }
    return base;
  }

  ExprPtr primary() {
    if (done()) fail("a number, name or '('");
    const Token& t = next();
    switch (t.kind) {
      case TokenKind::number:
        return Expr::constant(t.number);
      case TokenKind::lparen: {
        ExprPtr inner = expr();
        expect(TokenKind::rparen, "')'");
        return inner;
      }
      case TokenKind::identifier:
        if (!done() && peek().kind == TokenKind::lparen) return call(t);
        return Expr::variable(t.text);
      default:
        --pos_;
        fail("a number, name or '('");
    }
  }

  ExprPtr call(const Token& name) {
    next();  // '('
    ExprPtr first = expr();
    if (!done() && peek().kind == TokenKind::comma) {
      next();
      ExprPtr second = expr();
      expect(TokenKind::rparen, "')'");
      const auto fn = binary_from_name(name.text);
      if (!fn) {
        if (unary_from_name(name.text)) {
          throw ParseError(name.offset, name.text + " takes one argument");
        }
        throw UnknownFunction("unknown function: " + name.text);
      }
      return Expr::binary(*fn, std::move(first), std::move(second));
    }
    expect(TokenKind::rparen, "')' or ','");
    const auto fn = unary_from_name(name.text);
    if (!fn) {
      if (binary_from_name(name.text)) {
        throw ParseError(name.offset, name.text + " takes two arguments");
      }
      throw UnknownFunction("unknown function: " + name.text);
    }
    return Expr::unary(*fn, std::move(first));
  }

  void expect(TokenKind kind, const char* what) {
    if (done() || peek().kind != kind) fail(what);
    next();
  }

  bool is_op(const char* op) const {
    return !done() && peek().kind == TokenKind::op && peek().text == op;
  }

  bool done() const { return pos_ >= tokens_.size(); }
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& expected) const {
    if (done()) {
      const std::size_t end =
          tokens_.empty() ? 0 : tokens_.back().offset + tokens_.back().text.size();
      throw ParseError(end, "expected " + expected + ", found end of input");
    }
    throw ParseError(peek().offset, "expected " + expected + ", found " + describe(peek()));
  }

  std::span<const Token> tokens_;
  std::size_t pos_ = 0;
};

bool plain_identifier(const std::string& s) {
  if (s.empty()) return false;
  const auto start = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  if (!start(s.front())) return false;
  return std::all_of(s.begin(), s.end(), [&](char c) {
    return start(c) || (c >= '0' && c <= '9') || c == '.';
  });
}

const char* infix(BinaryFn fn) {
  switch (fn) {
    case BinaryFn::add: return " + ";
    case BinaryFn::sub: return " - ";
    case BinaryFn::mul: return " * ";
    case BinaryFn::div: return " / ";
    case BinaryFn::pow: return " ^ ";
    case BinaryFn::atan2: return nullptr;
  }
  return nullptr;
}

void render_into(const Expr& e, std::string& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Expr::Constant>) {
          char buf[64];
          const auto res = std::to_chars(buf, buf + sizeof buf, n.value);
          const std::string text(buf, res.ptr);
          if (n.value < 0 || std::signbit(n.value)) {
            out += "(" + text + ")";
          } else {
            out += text;
          }
        } else if constexpr (std::is_same_v<T, Expr::Variable>) {
          out += plain_identifier(n.name) ? n.name : "`" + n.name + "`";
        } else if constexpr (std::is_same_v<T, Expr::Unary>) {
          if (n.fn == UnaryFn::neg) {
            out += "(-";
            render_into(*n.operand, out);
            out += ")";
          } else {
            out += name(n.fn);
            out += "(";
            render_into(*n.operand, out);
            out += ")";
          }
        } else {
          if (const char* op = infix(n.fn)) {
            out += "(";
            render_into(*n.lhs, out);
            out += op;
            render_into(*n.rhs, out);
            out += ")";
          } else {
            out += name(n.fn);
            out += "(";
            render_into(*n.lhs, out);
            out += ", ";
            render_into(*n.rhs, out);
            out += ")";
          }
        }
      },
      e.node);
}

void collect_variables(const Expr& e, std::vector<std::string>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Expr::Variable>) {
          out.push_back(n.name);
        } else if constexpr (std::is_same_v<T, Expr::Unary>) {
          collect_variables(*n.operand, out);
        } else if constexpr (std::is_same_v<T, Expr::Binary>) {
          collect_variables(*n.lhs, out);
          collect_variables(*n.rhs, out);
        }
      },
      e.node);
}

}  // namespace

ExprAst parse(std::span<const Token> tokens) { return Parser(tokens).run(); }

ExprAst parse(std::string_view src) {
  const auto tokens = tokenize(src);
  return parse(tokens);
}

std::string render(const Expr& e) {
  std::string out;
  render_into(e, out);
  return out;
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& na) {
        using T = std::decay_t<decltype(na)>;
        const auto& nb = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, Expr::Constant>) {
          return std::bit_cast<std::uint64_t>(na.value) == std::bit_cast<std::uint64_t>(nb.value);
        } else if constexpr (std::is_same_v<T, Expr::Variable>) {
          return na.name == nb.name;
        } else if constexpr (std::is_same_v<T, Expr::Unary>) {
          return na.fn == nb.fn && structurally_equal(*na.operand, *nb.operand);
        } else {
          return na.fn == nb.fn && structurally_equal(*na.lhs, *nb.lhs) &&
                 structurally_equal(*na.rhs, *nb.rhs);
        }
      },
      a.node);
}

std::vector<std::string> free_variables(const Expr& e) {
  std::vector<std::string> out;
  collect_variables(e, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace unc
