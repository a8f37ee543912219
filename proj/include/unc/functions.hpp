#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string_view>
#include <utility>

namespace unc {

enum class UnaryFn {
  neg,
  abs,
  sqrt,
  exp,
  ln,
  log2,
  log10,
  sin,
  cos,
  tan,
  asin,
  acos,
  atan,
  sinh,
  cosh,
  tanh,
};

// atan2 is not part of the arithmetic operators but shares their two-input rule shape.
enum class BinaryFn { add, sub, mul, div, pow, atan2 };

inline constexpr std::array kUnaryFns = {
    UnaryFn::neg,  UnaryFn::abs,  UnaryFn::sqrt, UnaryFn::exp,  UnaryFn::ln,   UnaryFn::log2,
    UnaryFn::log10, UnaryFn::sin, UnaryFn::cos,  UnaryFn::tan,  UnaryFn::asin, UnaryFn::acos,
    UnaryFn::atan, UnaryFn::sinh, UnaryFn::cosh, UnaryFn::tanh,
};

inline constexpr std::array kBinaryFns = {
    BinaryFn::add, BinaryFn::sub, BinaryFn::mul, BinaryFn::div, BinaryFn::pow, BinaryFn::atan2,
};

std::string_view name(UnaryFn f);
std::string_view name(BinaryFn f);

/// Lookup by identifier; "log" is accepted as an alias of "ln".
std::optional<UnaryFn> unary_from_name(std::string_view id);
/// Lookup by identifier ("add", "pow", "atan2", ...).
std::optional<BinaryFn> binary_from_name(std::string_view id);

/// Throws UnknownFunction on anything outside the closed set.
UnaryFn require_unary(std::string_view id);
BinaryFn require_binary(std::string_view id);

[[noreturn]] void throw_unknown(UnaryFn f);
[[noreturn]] void throw_unknown(BinaryFn f);

inline double apply(UnaryFn f, double x) {
  switch (f) {
    case UnaryFn::neg: return -x;
    case UnaryFn::abs: return std::fabs(x);
    case UnaryFn::sqrt: return std::sqrt(x);
    case UnaryFn::exp: return std::exp(x);
    case UnaryFn::ln: return std::log(x);
    case UnaryFn::log2: return std::log2(x);
    case UnaryFn::log10: return std::log10(x);
    case UnaryFn::sin: return std::sin(x);
    case UnaryFn::cos: return std::cos(x);
    case UnaryFn::tan: return std::tan(x);
    case UnaryFn::asin: return std::asin(x);
    case UnaryFn::acos: return std::acos(x);
    case UnaryFn::atan: return std::atan(x);
    case UnaryFn::sinh: return std::sinh(x);
    case UnaryFn::cosh: return std::cosh(x);
    case UnaryFn::tanh: return std::tanh(x);
  }
  throw_unknown(f);
}

/// f'(x). abs'(0) is taken as 0.
inline double derivative(UnaryFn f, double x) {
  using std::numbers::ln10;
  using std::numbers::ln2;
  switch (f) {
    case UnaryFn::neg: return -1.0;
    case UnaryFn::abs: return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0);
    case UnaryFn::sqrt: return 0.5 / std::sqrt(x);
    case UnaryFn::exp: return std::exp(x);
    case UnaryFn::ln: return 1.0 / x;
    case UnaryFn::log2: return 1.0 / (x * ln2);
    case UnaryFn::log10: return 1.0 / (x * ln10);
    case UnaryFn::sin: return std::cos(x);
    case UnaryFn::cos: return -std::sin(x);
    case UnaryFn::tan: {
      const double c = std::cos(x);
      return 1.0 / (c * c);
    }
    case UnaryFn::asin: return 1.0 / std::sqrt(1.0 - x * x);
    case UnaryFn::acos: return -1.0 / std::sqrt(1.0 - x * x);
    case UnaryFn::atan: return 1.0 / (1.0 + x * x);
    case UnaryFn::sinh: return std::cosh(x);
    case UnaryFn::cosh: return std::sinh(x);
    case UnaryFn::tanh: {
      const double t = std::tanh(x);
      return 1.0 - t * t;
    }
  }
  throw_unknown(f);
}

inline double apply(BinaryFn f, double x, double y) {
  switch (f) {
    case BinaryFn::add: return x + y;
    case BinaryFn::sub: return x - y;
    case BinaryFn::mul: return x * y;
    case BinaryFn::div: return x / y;
    case BinaryFn::pow: return std::pow(x, y);
    case BinaryFn::atan2: return std::atan2(x, y);
  }
  throw_unknown(f);
}

/// (∂f/∂x, ∂f/∂y) at (x, y).
inline std::pair<double, double> partials(BinaryFn f, double x, double y) {
  switch (f) {
    case BinaryFn::add: return {1.0, 1.0};
    case BinaryFn::sub: return {1.0, -1.0};
    case BinaryFn::mul: return {y, x};
    case BinaryFn::div: return {1.0 / y, -x / (y * y)};
    case BinaryFn::pow: {
      const double dx = y == 0.0 ? 0.0 : y * std::pow(x, y - 1.0);
      // Undefined (NaN) for x <= 0.
      const double dy = x > 0.0 ? std::log(x) * std::pow(x, y)
                                : std::numeric_limits<double>::quiet_NaN();
      return {dx, dy};
    }
    case BinaryFn::atan2: {
      const double r2 = x * x + y * y;
      return {y / r2, -x / r2};
    }
  }
  throw_unknown(f);
}

}  // namespace unc
