#include "unc/kernels.hpp"

#include <cstdint>

namespace unc::kernels {

void unary(UnaryFn f, std::span<const double> values, std::span<const double> errors,
           std::span<double> out_values, std::span<double> out_errors) {
  const auto n = static_cast<std::int64_t>(values.size());
#pragma omp parallel for schedule(static) if (values.size() >= kParallelThreshold)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto r = propagate_scalar(f, {values[i], errors[i]});
    out_values[i] = r.value;
    out_errors[i] = r.error;
  }
}

void binary(BinaryFn f, std::span<const double> x_values, std::span<const double> x_errors,
            std::span<const double> y_values, std::span<const double> y_errors,
            std::span<double> out_values, std::span<double> out_errors) {
  const auto n = static_cast<std::int64_t>(out_values.size());
  const std::size_t x_step = x_values.size() == 1 ? 0 : 1;
  const std::size_t y_step = y_values.size() == 1 ? 0 : 1;
#pragma omp parallel for schedule(static) if (out_values.size() >= kParallelThreshold)
  for (std::int64_t i = 0; i < n; ++i) {
    const std::size_t xi = static_cast<std::size_t>(i) * x_step;
    const std::size_t yi = static_cast<std::size_t>(i) * y_step;
    const auto r =
        propagate_scalar(f, {x_values[xi], x_errors[xi]}, {y_values[yi], y_errors[yi]});
    out_values[i] = r.value;
    out_errors[i] = r.error;
  }
}

namespace serial {

void unary(UnaryFn f, std::span<const double> values, std::span<const double> errors,
           std::span<double> out_values, std::span<double> out_errors) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto r = propagate_scalar(f, {values[i], errors[i]});
    out_values[i] = r.value;
    out_errors[i] = r.error;
  }
}

void binary(BinaryFn f, std::span<const double> x_values, std::span<const double> x_errors,
            std::span<const double> y_values, std::span<const double> y_errors,
            std::span<double> out_values, std::span<double> out_errors) {
  const std::size_t x_step = x_values.size() == 1 ? 0 : 1;
  const std::size_t y_step = y_values.size() == 1 ? 0 : 1;
  for (std::size_t i = 0; i < out_values.size(); ++i) {
    const auto r = propagate_scalar(f, {x_values[i * x_step], x_errors[i * x_step]},
                                    {y_values[i * y_step], y_errors[i * y_step]});
    out_values[i] = r.value;
    out_errors[i] = r.error;
  }
}

}  // namespace serial
}  // namespace unc::kernels
