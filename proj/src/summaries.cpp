#include "unc/summaries.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "unc/propagation.hpp"

namespace unc {
namespace {

void require_nonempty(const UncertainVector& x, const char* what) {
  if (x.empty()) throw EmptyInput(std::string(what) + " of an empty vector");
}

double sample_median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

UncertainScalar sum(const UncertainVector& x) {
  require_nonempty(x, "sum");
  double total = 0.0;
  double squares = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    total += x.values()[i];
    squares += x.errors()[i] * x.errors()[i];
  }
  return {total, std::sqrt(squares)};
}

UncertainScalar prod(const UncertainVector& x) {
  require_nonempty(x, "prod");
  UncertainScalar acc = x[0];
  for (std::size_t i = 1; i < x.size(); ++i) acc = propagate_binary(BinaryFn::mul, acc, x[i]);
  return acc;
}

// weighted_mean() with unit weights must agree with this to the last bit, so
// the two keep the same operation order.
UncertainScalar mean(const UncertainVector& x) {
  require_nonempty(x, "mean");
  const auto n = static_cast<double>(x.size());
  double total = 0.0;
  double error_total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    total += x.values()[i];
    error_total += x.errors()[i];
  }
  const double center = total / n;
  const double mean_error = error_total / n;
  if (x.size() == 1) return {center, x.errors()[0]};

  double squares = 0.0;
  for (double v : x.values()) squares += (v - center) * (v - center);
  const double sem = std::sqrt(squares / (n - 1.0)) / std::sqrt(n);
  return {center, std::max(sem, mean_error)};
}

UncertainScalar weighted_mean(const UncertainVector& x, std::span<const double> weights) {
  require_nonempty(x, "weighted mean");
  if (weights.size() != x.size()) {
    throw LengthMismatch("expected " + std::to_string(x.size()) + " weights, got " +
                         std::to_string(weights.size()));
  }
  double largest = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || std::isinf(w)) {
      throw InvalidArgument("weights must be finite and nonnegative");
    }
    largest = std::max(largest, w);
  }
  if (largest == 0.0) throw ZeroWeightSum("weights sum to zero");

  std::vector<double> w(weights.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = weights[i] / largest;

  double w_sum = 0.0;
  double w_sq_sum = 0.0;
  double total = 0.0;
  double error_total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    w_sum += w[i];
    w_sq_sum += w[i] * w[i];
    total += w[i] * x.values()[i];
    error_total += w[i] * x.errors()[i];
  }
  const double center = total / w_sum;
  const double mean_error = error_total / w_sum;

  // One effective observation: no spread to estimate.
  const double dof = w_sum - w_sq_sum / w_sum;
  if (dof <= 0.0) return {center, mean_error};

  double squares = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x.values()[i] - center;
    squares += w[i] * (d * d);
  }
  const double n_eff = w_sum * w_sum / w_sq_sum;
  const double sem = std::sqrt(squares / dof) / std::sqrt(n_eff);
  return {center, std::max(sem, mean_error)};
}

UncertainScalar median(const UncertainVector& x) {
  require_nonempty(x, "median");
  const double center = sample_median({x.values().begin(), x.values().end()});
  return {center, mean(x).error * kMedianErrorFactor};
}

UncertainScalar min(const UncertainVector& x) {
  require_nonempty(x, "min");
  const auto it = std::min_element(x.values().begin(), x.values().end());
  return x[static_cast<std::size_t>(it - x.values().begin())];
}

UncertainScalar max(const UncertainVector& x) {
  require_nonempty(x, "max");
  const auto it = std::max_element(x.values().begin(), x.values().end());
  return x[static_cast<std::size_t>(it - x.values().begin())];
}

UncertainVector range(const UncertainVector& x) {
  const auto lo = min(x);
  const auto hi = max(x);
  return UncertainVector::assume_valid({lo.value, hi.value}, {lo.error, hi.error});
}

}  // namespace unc
