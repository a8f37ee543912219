#pragma once

#include <cmath>
#include <numbers>
#include <span>

#include "unc/core.hpp"

namespace unc {

/// √(π/2), the asymptotic efficiency ratio between the median and the mean
/// of a normal sample.
inline const double kMedianErrorFactor = std::sqrt(std::numbers::pi / 2.0);

/// Σx with Δ = √(ΣΔx_i²). Throws EmptyInput.
UncertainScalar sum(const UncertainVector& x);

/// Left fold of the mul rule. Throws EmptyInput.
UncertainScalar prod(const UncertainVector& x);

/// Arithmetic mean.
///
/// The error is the larger of the standard error of the mean (sample SD with
/// n − 1 denominator, over √n) and the mean of the individual errors: a
/// central value is never reported as more certain than the measurements it
/// summarizes. A single element keeps its own error.
UncertainScalar mean(const UncertainVector& x);

/// Weighted mean Σw·x / Σw.
///
/// Error is max(weighted SEM, Σw·Δx / Σw). The weighted SEM uses the
/// unbiased reliability-weight variance Σw(x − x̄)² / (W − Σw²/W) over the
/// square root of the effective sample size W²/Σw², which reduces to the
/// unweighted rule when all weights are equal. Weights are rescaled by their
/// maximum first, so uniform weights reproduce mean() bit for bit. This rule
/// is an interpretation; other weighted-SEM variants exist.
///
/// Throws EmptyInput, LengthMismatch, InvalidArgument (negative weight) and
/// ZeroWeightSum.
UncertainScalar weighted_mean(const UncertainVector& x, std::span<const double> weights);

/// Sample median (midpoint of the two central values for even n), with
/// error √(π/2) times the error of mean(x).
UncertainScalar median(const UncertainVector& x);

/// Smallest value, carrying that element's error. Ties keep the first.
UncertainScalar min(const UncertainVector& x);
/// Largest value, carrying that element's error. Ties keep the first.
UncertainScalar max(const UncertainVector& x);
/// {min(x), max(x)}.
UncertainVector range(const UncertainVector& x);

}  // namespace unc
