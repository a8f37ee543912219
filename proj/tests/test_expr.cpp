#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <vector>

#include "unc/error.hpp"
#include "unc/expr.hpp"

using namespace unc;

namespace {

std::vector<TokenKind> kinds(const std::vector<Token>& tokens) {
  std::vector<TokenKind> out;
  for (const auto& t : tokens) out.push_back(t.kind);
  return out;
}

}  // namespace

TEST(Tokenize, Division) {
  const auto t = tokenize("x/y");
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(kinds(t), (std::vector{TokenKind::identifier, TokenKind::op, TokenKind::identifier}));
  EXPECT_EQ(t[1].text, "/");
  EXPECT_EQ(t[2].offset, 2u);
}

TEST(Tokenize, FunctionAndExponent) {
  const auto t = tokenize("sin(x) + 2e-3");
  EXPECT_EQ(kinds(t), (std::vector{TokenKind::identifier, TokenKind::lparen, TokenKind::identifier,
                                   TokenKind::rparen, TokenKind::op, TokenKind::number}));
  EXPECT_EQ(t.back().number, 2e-3);
}

TEST(Tokenize, DoubleStarIsPower) {
  const auto t = tokenize("x**2");
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[1].text, "^");
}

TEST(Tokenize, DottedAndQuotedNames) {
  EXPECT_EQ(tokenize("Sepal.Length")[0].text, "Sepal.Length");
  EXPECT_EQ(tokenize("`3x` + 1")[0].text, "3x");
}

TEST(Tokenize, RejectsStrayCharacter) {
  try {
    tokenize("x $ y");
    FAIL();
  } catch (const LexError& e) {
    EXPECT_EQ(e.position(), 2u);
    EXPECT_EQ(e.offending(), '$');
  }
}

TEST(Parse, Precedence) {
  EXPECT_EQ(render(*parse("a+b*c")), "(a + (b * c))");
  EXPECT_EQ(render(*parse("a-b-c")), "((a - b) - c)");
  EXPECT_EQ(render(*parse("2^3^2")), "(2 ^ (3 ^ 2))");
  EXPECT_EQ(render(*parse("-x^2")), "(-(x ^ 2))");
  EXPECT_EQ(render(*parse("atan2(y, x) / 2")), "(atan2(y, x) / 2)");
}

TEST(Parse, DivisionTree) {
  const auto ast = parse("x/y");
  const auto expected = Expr::binary(BinaryFn::div, Expr::variable("x"), Expr::variable("y"));
  EXPECT_TRUE(structurally_equal(*ast, *expected));
}

TEST(Parse, ScalingAndSelfAdditionDiffer) {
  EXPECT_FALSE(structurally_equal(*parse("2*x"), *parse("x+x")));
  EXPECT_TRUE(structurally_equal(*parse("(x + x)"), *parse("x+x")));
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse("x +"), ParseError);
  EXPECT_THROW(parse("(x"), ParseError);
  EXPECT_THROW(parse("x y"), ParseError);
  EXPECT_THROW(parse("sin(x, y)"), ParseError);
  EXPECT_THROW(parse("gamma(x)"), UnknownFunction);
  try {
    parse("x * )");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
    EXPECT_NE(e.reason().find("found ')'"), std::string::npos);
  }
}

TEST(Parse, RenderRoundtrips) {
  for (const char* src : {"x/y", "-2*x", "sqrt(a^2 + b^2)", "log(x) - exp(-y)", "1e-3*x"}) {
    const auto ast = parse(src);
    EXPECT_TRUE(structurally_equal(*ast, *parse(render(*ast)))) << src;
  }
}

TEST(Parse, FreeVariables) {
  EXPECT_EQ(free_variables(*parse("y*x + sin(x) - 2")), (std::vector<std::string>{"x", "y"}));
}

TEST(Eval, DivisionExample) {
  const auto r = eval_uncertain(*parse("x/y"), {{"x", {5.0, 0.01}}, {"y", {1.0, 0.01}}});
  EXPECT_EQ(r.value, 5.0);
  EXPECT_NEAR(r.error, 0.0509902, 1e-7);
}

TEST(Eval, OccurrencesAreIndependent) {
  const UncertainEnv env{{"x", {1.0, 1.0 / 30.0}}};
  const auto self = eval_uncertain(*parse("x+x"), env);
  const auto twice = eval_uncertain(*parse("2*x"), env);
  EXPECT_EQ(self.value, 2.0);
  EXPECT_NEAR(self.error, 0.04714045, 1e-8);
  EXPECT_NEAR(twice.error, 0.06666667, 1e-8);
  // Same holds for x - x: not an exact zero.
  EXPECT_NEAR(eval_uncertain(*parse("x-x"), env).error, 0.04714045, 1e-8);
}

TEST(Eval, UnboundVariable) {
  try {
    eval_uncertain(*parse("x*y"), {{"x", {1.0, 0.1}}});
    FAIL();
  } catch (const UnboundVariable& e) {
    EXPECT_EQ(e.name(), "y");
  }
  EXPECT_THROW(eval_numeric(*parse("z"), {}), UnboundVariable);
}

TEST(Eval, NumericMatchesBound) {
  const auto ast = parse("sqrt(a^2 + b^2) * cos(b) / (1 + exp(-a))");
  const std::vector<std::string> slots{"a", "b"};
  const BoundExpr program(*ast, slots);
  EXPECT_EQ(program.slot_count(), 2u);
  for (double a = -2; a <= 2; a += 0.5) {
    for (double b = -1; b <= 1; b += 0.25) {
      const double expected = std::sqrt(a * a + b * b) * std::cos(b) / (1 + std::exp(-a));
      const double inputs[] = {a, b};
      EXPECT_DOUBLE_EQ(eval_numeric(*ast, {{"a", a}, {"b", b}}), expected);
      EXPECT_EQ(program.eval(inputs), eval_numeric(*ast, {{"a", a}, {"b", b}}));
    }
  }
}

TEST(Eval, DeepExpressionUsesHeapStack) {
  std::string src = "x";
  for (int i = 0; i < 40; ++i) src = "(1 + " + src + ")";
  // Right-nested adds keep every left operand on the stack.
  std::string right = "x";
  for (int i = 0; i < 40; ++i) right = "x + (" + right + ")";
  const std::vector<std::string> slots{"x"};
  const double one[] = {1.0};
  EXPECT_EQ(BoundExpr(*parse(src), slots).eval(one), 41.0);
  EXPECT_EQ(BoundExpr(*parse(right), slots).eval(one), 41.0);
}
