#pragma once

// Arithmetic expressions over named measurements.
//
// Grammar (whitespace is insignificant):
//
//   expr    := term (("+" | "-") term)*
//   term    := unary (("*" | "/") unary)*
//   unary   := ("-" | "+") unary | power
//   power   := primary [("^" | "**") unary]          right associative
//   primary := number | name | name "(" expr ["," expr] ")" | "(" expr ")"
//   number  := digits ["." digits] [("e" | "E") ["+" | "-"] digits]
//   name    := [A-Za-z_][A-Za-z0-9_.]*  |  "`" any-but-backtick+ "`"
//
// Precedence, tightest first: ^, unary minus, * /, + -. One-argument calls
// take the unary functions (sin, ln, sqrt, ...); two-argument calls take
// pow, atan2, add, sub, mul, div. Literals are exact.

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "unc/core.hpp"
#include "unc/functions.hpp"

namespace unc {

enum class TokenKind { number, identifier, op, lparen, rparen, comma };

struct Token {
  TokenKind kind;
  std::string text;
  double number = 0.0;
  std::size_t offset = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

/// Throws LexError with the byte offset of the first unexpected character.
std::vector<Token> tokenize(std::string_view src);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  struct Constant {
    double value;
  };
  struct Variable {
    std::string name;
  };
  struct Unary {
    UnaryFn fn;
    ExprPtr operand;
  };
  struct Binary {
    BinaryFn fn;
    ExprPtr lhs;
    ExprPtr rhs;
  };

  std::variant<Constant, Variable, Unary, Binary> node;

  static ExprPtr constant(double v);
  static ExprPtr variable(std::string name);
  static ExprPtr unary(UnaryFn fn, ExprPtr operand);
  static ExprPtr binary(BinaryFn fn, ExprPtr lhs, ExprPtr rhs);
};

/// Parsed expression tree. Immutable; safe to share across threads.
using ExprAst = ExprPtr;

/// Throws ParseError (expected vs. found) or UnknownFunction.
ExprAst parse(std::span<const Token> tokens);
/// tokenize + parse.
ExprAst parse(std::string_view src);

/// Fully parenthesized canonical text; parse(render(a)) is structurally equal to a.
std::string render(const Expr& e);

/// Deep structural equality. Constants compare by bit pattern.
bool structurally_equal(const Expr& a, const Expr& b);

/// Distinct variable names, sorted.
std::vector<std::string> free_variables(const Expr& e);

using UncertainEnv = std::map<std::string, UncertainScalar, std::less<>>;
using NumericEnv = std::map<std::string, double, std::less<>>;

/// Post-order evaluation through the propagation rules. Every occurrence of a
/// variable is an independent measurement, so "x+x" and "2*x" differ.
/// Throws UnboundVariable.
UncertainScalar eval_uncertain(const Expr& e, const UncertainEnv& env);

/// Plain evaluation with the same value rules. Throws UnboundVariable.
double eval_numeric(const Expr& e, const NumericEnv& env);

/// Expression flattened to a postfix program over indexed input slots, for
/// evaluating one tree many times. Produces exactly eval_numeric's results.
class BoundExpr {
 public:
  /// `slots` names the inputs in the order eval() receives them. Throws
  /// UnboundVariable for a free variable missing from `slots`.
  BoundExpr(const Expr& e, std::span<const std::string> slots);

  double eval(std::span<const double> inputs) const;

  std::size_t slot_count() const noexcept { return slot_count_; }

 private:
  enum class Op { constant, load, unary, binary };
  struct Instr {
    Op op;
    UnaryFn ufn = UnaryFn::neg;
    BinaryFn bfn = BinaryFn::add;
    double constant = 0.0;
    std::size_t slot = 0;
  };

  void emit(const Expr& e, std::span<const std::string> slots, std::size_t depth);

  std::vector<Instr> program_;
  std::size_t max_depth_ = 0;
  std::size_t slot_count_ = 0;
};

}  // namespace unc
