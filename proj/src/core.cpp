#include "unc/core.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace unc {
namespace {

void check_error(double value, double& error, std::size_t i) {
  if (std::isnan(value)) {
    error = std::numeric_limits<double>::quiet_NaN();
    return;
  }
  if (error < 0.0) {
    throw NegativeError("negative uncertainty " + std::to_string(error) + " at index " +
                        std::to_string(i));
  }
  if (std::isnan(error) && !std::isinf(value)) {
    throw InvalidError("NaN uncertainty on finite value at index " + std::to_string(i));
  }
  if (std::isinf(error)) {
    throw InvalidError("infinite uncertainty at index " + std::to_string(i));
  }
}

}  // namespace

UncertainVector::UncertainVector(std::vector<double> values, std::vector<double> errors)
    : values_(std::move(values)), errors_(std::move(errors)) {
  if (values_.size() != errors_.size()) {
    throw LengthMismatch("values and errors differ in length (" +
                         std::to_string(values_.size()) + " vs " +
                         std::to_string(errors_.size()) + ")");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) check_error(values_[i], errors_[i], i);
}

UncertainVector UncertainVector::exact(std::vector<double> values) {
  std::vector<double> errors(values.size(), 0.0);
  return UncertainVector(std::move(values), std::move(errors));
}

UncertainVector UncertainVector::assume_valid(std::vector<double> values,
                                              std::vector<double> errors) {
  UncertainVector out;
  out.values_ = std::move(values);
  out.errors_ = std::move(errors);
  return out;
}

UncertainScalar UncertainVector::at(std::size_t i) const {
  if (i >= size()) {
    throw IndexOutOfBounds("index " + std::to_string(i) + " out of range for length " +
                           std::to_string(size()));
  }
  return (*this)[i];
}

UncertainVector make_uncertain(std::span<const double> values, std::span<const double> errors) {
  if (errors.size() == 1) return make_uncertain(values, errors.front());
  if (errors.size() != values.size()) {
    throw LengthMismatch("expected 1 or " + std::to_string(values.size()) +
                         " uncertainties, got " + std::to_string(errors.size()));
  }
  return UncertainVector({values.begin(), values.end()}, {errors.begin(), errors.end()});
}

UncertainVector make_uncertain(std::span<const double> values, double error) {
  return UncertainVector({values.begin(), values.end()},
                         std::vector<double>(values.size(), error));
}

UncertainVector make_uncertain(std::initializer_list<double> values,
                               std::initializer_list<double> errors) {
  return make_uncertain(std::span<const double>(values.begin(), values.size()),
                        std::span<const double>(errors.begin(), errors.size()));
}

std::vector<double> get_errors(const UncertainVector& x) {
  return {x.errors().begin(), x.errors().end()};
}

std::vector<double> errors_min(const UncertainVector& x) {
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x.values()[i] - x.errors()[i];
  return out;
}

std::vector<double> errors_max(const UncertainVector& x) {
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x.values()[i] + x.errors()[i];
  return out;
}

UncertainVector subset(const UncertainVector& x, std::span<const std::size_t> indices) {
  std::vector<double> values;
  std::vector<double> errors;
  values.reserve(indices.size());
  errors.reserve(indices.size());
  for (std::size_t i : indices) {
    const auto element = x.at(i);
    values.push_back(element.value);
    errors.push_back(element.error);
  }
  return UncertainVector::assume_valid(std::move(values), std::move(errors));
}

UncertainVector concat(std::span<const UncertainVector> parts) {
  std::vector<double> values;
  std::vector<double> errors;
  for (const auto& p : parts) {
    values.insert(values.end(), p.values().begin(), p.values().end());
    errors.insert(errors.end(), p.errors().begin(), p.errors().end());
  }
  return UncertainVector::assume_valid(std::move(values), std::move(errors));
}

UncertainVector concat(std::initializer_list<UncertainVector> parts) {
  return concat(std::span<const UncertainVector>(parts.begin(), parts.size()));
}

}  // namespace unc
