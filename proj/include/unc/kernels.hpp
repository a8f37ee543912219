#pragma once

// Elementwise first-order propagation kernels.
//
// Every kernel exists twice: the default OpenMP version and a serial
// reference in `kernels::serial`. Both run the same per-element rule, so their
// outputs are bitwise identical for any thread count; tests and the benchmark
// target rely on that.

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>

#include "unc/core.hpp"
#include "unc/functions.hpp"

namespace unc::kernels {

/// Vectors shorter than this run on the calling thread.
inline constexpr std::size_t kParallelThreshold = 4096;

// A zero input uncertainty contributes nothing, even where the partial is
// infinite or undefined (e.g. x^2 at x < 0 with its exact exponent).
inline double error_term(double partial, double error) {
  return error == 0.0 ? 0.0 : partial * error;
}

inline double quadrature(double a, double b) {
  if (a == 0.0) return std::fabs(b);
  if (b == 0.0) return std::fabs(a);
  return std::hypot(a, b);
}

inline UncertainScalar propagate_scalar(UnaryFn f, UncertainScalar x) {
  const double value = apply(f, x.value);
  if (std::isnan(value)) return {value, std::numeric_limits<double>::quiet_NaN()};
  return {value, std::fabs(error_term(derivative(f, x.value), x.error))};
}

inline UncertainScalar propagate_scalar(BinaryFn f, UncertainScalar x, UncertainScalar y) {
  const double value = apply(f, x.value, y.value);
  if (std::isnan(value)) return {value, std::numeric_limits<double>::quiet_NaN()};
  const auto [dx, dy] = partials(f, x.value, y.value);
  return {value, quadrature(error_term(dx, x.error), error_term(dy, y.error))};
}

/// out[i] = f(in[i]) with |f'|·Δ. All spans have equal length.
void unary(UnaryFn f, std::span<const double> values, std::span<const double> errors,
           std::span<double> out_values, std::span<double> out_errors);

/// Two-input rule with length-1 broadcasting on either side; output length
/// is max of the input lengths.
void binary(BinaryFn f, std::span<const double> x_values, std::span<const double> x_errors,
            std::span<const double> y_values, std::span<const double> y_errors,
            std::span<double> out_values, std::span<double> out_errors);

namespace serial {

void unary(UnaryFn f, std::span<const double> values, std::span<const double> errors,
           std::span<double> out_values, std::span<double> out_errors);

void binary(BinaryFn f, std::span<const double> x_values, std::span<const double> x_errors,
            std::span<const double> y_values, std::span<const double> y_errors,
            std::span<double> out_values, std::span<double> out_errors);

}  // namespace serial
}  // namespace unc::kernels
