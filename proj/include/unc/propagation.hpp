#pragma once

#include <Eigen/Dense>

#include "unc/core.hpp"
#include "unc/functions.hpp"
#include "unc/kernels.hpp"

namespace unc {

using Jacobian = Eigen::MatrixXd;
using CovMatrix = Eigen::MatrixXd;

/// y = f(x), Δy = |f'(x)|·Δx elementwise. Domain violations give NaN value
/// and NaN error rather than throwing.
UncertainVector propagate_unary(UnaryFn f, const UncertainVector& x);

/// z = f(x, y), Δz² = (∂f/∂x·Δx)² + (∂f/∂y·Δy)² elementwise.
///
/// Operands are always independent measurements: passing the same vector
/// twice (x + x) combines two independent errors, unlike 2·x. Either side may
/// have length 1 and is then broadcast; any other length difference throws
/// LengthMismatch.
UncertainVector propagate_binary(BinaryFn f, const UncertainVector& x, const UncertainVector& y);

namespace serial {
UncertainVector propagate_unary(UnaryFn f, const UncertainVector& x);
UncertainVector propagate_binary(BinaryFn f, const UncertainVector& x, const UncertainVector& y);
}  // namespace serial

inline UncertainScalar propagate_unary(UnaryFn f, UncertainScalar x) {
  return kernels::propagate_scalar(f, x);
}
inline UncertainScalar propagate_binary(BinaryFn f, UncertainScalar x, UncertainScalar y) {
  return kernels::propagate_scalar(f, x, y);
}

/// Σ_Y = J Σ_X Jᵀ, returned symmetrized. Throws DimensionMismatch when J's
/// column count differs from Σ's order, NotSymmetric when Σ deviates from
/// its transpose by more than 1e-12 of its largest entry, and
/// NotPositiveSemidefinite on a clearly negative eigenvalue.
CovMatrix propagate_general(const Jacobian& jacobian, const CovMatrix& covariance);

/// Diagonal covariance from independent standard uncertainties.
CovMatrix diagonal_covariance(std::span<const double> errors);

/// Running sum; Δy_k = √(Σ_{i≤k} Δx_i²).
UncertainVector cumulative_sum(const UncertainVector& x);
/// Running product by repeated application of the mul rule.
UncertainVector cumulative_prod(const UncertainVector& x);
/// y_k = x_{k+1} − x_k with independent elements. Throws TooShort below 2.
UncertainVector diff(const UncertainVector& x);

// Plain numbers on either side of an operator are exact.
UncertainVector operator-(const UncertainVector& x);
UncertainVector operator+(const UncertainVector& x, const UncertainVector& y);
UncertainVector operator-(const UncertainVector& x, const UncertainVector& y);
UncertainVector operator*(const UncertainVector& x, const UncertainVector& y);
UncertainVector operator/(const UncertainVector& x, const UncertainVector& y);
UncertainVector operator+(const UncertainVector& x, double k);
UncertainVector operator+(double k, const UncertainVector& x);
UncertainVector operator-(const UncertainVector& x, double k);
UncertainVector operator-(double k, const UncertainVector& x);
UncertainVector operator*(const UncertainVector& x, double k);
UncertainVector operator*(double k, const UncertainVector& x);
UncertainVector operator/(const UncertainVector& x, double k);
UncertainVector operator/(double k, const UncertainVector& x);
UncertainVector pow(const UncertainVector& x, double k);
UncertainVector pow(const UncertainVector& x, const UncertainVector& y);

}  // namespace unc
