#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "unc/error.hpp"

namespace unc {

/// A single measurement: quantity value and its standard uncertainty.
struct UncertainScalar {
  double value = 0.0;
  double error = 0.0;

  friend bool operator==(const UncertainScalar&, const UncertainScalar&) = default;
};

/// Quantity values paired elementwise with standard uncertainties.
///
/// Both sequences always have the same length. Uncertainties are
/// nonnegative; a NaN uncertainty appears only on a NaN value or as the
/// honest output of a propagation rule whose derivative is undefined.
/// Instances are immutable: every operation returns a new vector.
class UncertainVector {
 public:
  UncertainVector() = default;

  /// Validating constructor. Throws LengthMismatch, NegativeError, InvalidError.
  UncertainVector(std::vector<double> values, std::vector<double> errors);

  /// Values with zero uncertainty.
  static UncertainVector exact(std::vector<double> values);

  /// Adopts propagation output without validation. The caller guarantees
  /// equal lengths; NaN errors are kept as produced.
  static UncertainVector assume_valid(std::vector<double> values, std::vector<double> errors);

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  std::span<const double> values() const noexcept { return values_; }
  std::span<const double> errors() const noexcept { return errors_; }

  UncertainScalar operator[](std::size_t i) const { return {values_[i], errors_[i]}; }
  UncertainScalar at(std::size_t i) const;

  friend bool operator==(const UncertainVector&, const UncertainVector&) = default;

 private:
  std::vector<double> values_;
  std::vector<double> errors_;
};

/// Attaches uncertainties to values. `errors` is either one entry, which is
/// broadcast to every element, or exactly one entry per value.
UncertainVector make_uncertain(std::span<const double> values, std::span<const double> errors);
UncertainVector make_uncertain(std::span<const double> values, double error);
UncertainVector make_uncertain(std::initializer_list<double> values,
                               std::initializer_list<double> errors);

inline UncertainVector make_uncertain(UncertainScalar x) {
  return make_uncertain(std::span<const double>(&x.value, 1), x.error);
}

std::vector<double> get_errors(const UncertainVector& x);

/// Lower interval bound, values − errors.
std::vector<double> errors_min(const UncertainVector& x);
/// Upper interval bound, values + errors.
std::vector<double> errors_max(const UncertainVector& x);

UncertainVector subset(const UncertainVector& x, std::span<const std::size_t> indices);
UncertainVector concat(std::span<const UncertainVector> parts);
UncertainVector concat(std::initializer_list<UncertainVector> parts);

}  // namespace unc
