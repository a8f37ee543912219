#include "unc/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace unc {
namespace {

std::size_t broadcast_length(const UncertainVector& x, const UncertainVector& y) {
  if (x.size() == y.size()) return x.size();
  if (x.size() == 1) return y.size();
  if (y.size() == 1) return x.size();
  throw LengthMismatch("operand lengths " + std::to_string(x.size()) + " and " +
                       std::to_string(y.size()) + " do not broadcast");
}

template <class Kernel>
UncertainVector run_unary(Kernel kernel, UnaryFn f, const UncertainVector& x) {
  std::vector<double> values(x.size());
  std::vector<double> errors(x.size());
  kernel(f, x.values(), x.errors(), values, errors);
  return UncertainVector::assume_valid(std::move(values), std::move(errors));
}

template <class Kernel>
UncertainVector run_binary(Kernel kernel, BinaryFn f, const UncertainVector& x,
                           const UncertainVector& y) {
  const std::size_t n = broadcast_length(x, y);
  std::vector<double> values(n);
  std::vector<double> errors(n);
  kernel(f, x.values(), x.errors(), y.values(), y.errors(), values, errors);
  return UncertainVector::assume_valid(std::move(values), std::move(errors));
}

UncertainVector constant(double k) { return UncertainVector::exact({k}); }

}  // namespace

UncertainVector propagate_unary(UnaryFn f, const UncertainVector& x) {
  return run_unary(kernels::unary, f, x);
}

UncertainVector propagate_binary(BinaryFn f, const UncertainVector& x, const UncertainVector& y) {
  return run_binary(kernels::binary, f, x, y);
}

namespace serial {
UncertainVector propagate_unary(UnaryFn f, const UncertainVector& x) {
  return run_unary(kernels::serial::unary, f, x);
}
UncertainVector propagate_binary(BinaryFn f, const UncertainVector& x, const UncertainVector& y) {
  return run_binary(kernels::serial::binary, f, x, y);
}
}  // namespace serial

CovMatrix propagate_general(const Jacobian& jacobian, const CovMatrix& covariance) {
  if (covariance.rows() != covariance.cols()) {
    throw DimensionMismatch("covariance must be square, got " +
                            std::to_string(covariance.rows()) + "x" +
                            std::to_string(covariance.cols()));
  }
  if (jacobian.cols() != covariance.rows()) {
    throw DimensionMismatch("jacobian has " + std::to_string(jacobian.cols()) +
                            " columns but covariance has order " +
                            std::to_string(covariance.rows()));
  }
  const double scale = covariance.size() == 0 ? 0.0 : covariance.cwiseAbs().maxCoeff();
  const double asymmetry =
      covariance.size() == 0 ? 0.0 : (covariance - covariance.transpose()).cwiseAbs().maxCoeff();
  if (asymmetry > 1e-12 * scale) {
    throw NotSymmetric("covariance asymmetry " + std::to_string(asymmetry) +
                       " exceeds tolerance");
  }
  if (covariance.rows() > 0) {
    const Eigen::SelfAdjointEigenSolver<CovMatrix> eig(covariance, Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() < -1e-12 * scale) {
      throw NotPositiveSemidefinite("covariance has negative eigenvalue " +
                                    std::to_string(eig.eigenvalues().minCoeff()));
    }
  }
  const CovMatrix out = jacobian * covariance * jacobian.transpose();
  return 0.5 * (out + out.transpose());
}

CovMatrix diagonal_covariance(std::span<const double> errors) {
  CovMatrix out = CovMatrix::Zero(static_cast<Eigen::Index>(errors.size()),
                                  static_cast<Eigen::Index>(errors.size()));
  for (std::size_t i = 0; i < errors.size(); ++i) {
    out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = errors[i] * errors[i];
  }
  return out;
}

UncertainVector cumulative_sum(const UncertainVector& x) {
  std::vector<double> values(x.size());
  std::vector<double> errors(x.size());
  double total = 0.0;
  double squares = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    total += x.values()[i];
    squares += x.errors()[i] * x.errors()[i];
    values[i] = total;
    errors[i] = std::sqrt(squares);
  }
  return UncertainVector::assume_valid(std::move(values), std::move(errors));
}

UncertainVector cumulative_prod(const UncertainVector& x) {
  std::vector<double> values(x.size());
  std::vector<double> errors(x.size());
  UncertainScalar acc;
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc = i == 0 ? x[0] : propagate_binary(BinaryFn::mul, acc, x[i]);
    values[i] = acc.value;
    errors[i] = acc.error;
  }
  return UncertainVector::assume_valid(std::move(values), std::move(errors));
}

UncertainVector diff(const UncertainVector& x) {
  if (x.size() < 2) {
    throw TooShort("diff needs at least 2 elements, got " + std::to_string(x.size()));
  }
  std::vector<double> values(x.size() - 1);
  std::vector<double> errors(x.size() - 1);
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const auto d = propagate_binary(BinaryFn::sub, x[i + 1], x[i]);
    values[i] = d.value;
    errors[i] = d.error;
  }
  return UncertainVector::assume_valid(std::move(values), std::move(errors));
}

UncertainVector operator-(const UncertainVector& x) { return propagate_unary(UnaryFn::neg, x); }

UncertainVector operator+(const UncertainVector& x, const UncertainVector& y) {
  return propagate_binary(BinaryFn::add, x, y);
}
UncertainVector operator-(const UncertainVector& x, const UncertainVector& y) {
  return propagate_binary(BinaryFn::sub, x, y);
}
UncertainVector operator*(const UncertainVector& x, const UncertainVector& y) {
  return propagate_binary(BinaryFn::mul, x, y);
}
UncertainVector operator/(const UncertainVector& x, const UncertainVector& y) {
  return propagate_binary(BinaryFn::div, x, y);
}
UncertainVector operator+(const UncertainVector& x, double k) { return x + constant(k); }
UncertainVector operator+(double k, const UncertainVector& x) { return constant(k) + x; }
UncertainVector operator-(const UncertainVector& x, double k) { return x - constant(k); }
UncertainVector operator-(double k, const UncertainVector& x) { return constant(k) - x; }
UncertainVector operator*(const UncertainVector& x, double k) { return x * constant(k); }
UncertainVector operator*(double k, const UncertainVector& x) { return constant(k) * x; }
UncertainVector operator/(const UncertainVector& x, double k) { return x / constant(k); }
UncertainVector operator/(double k, const UncertainVector& x) { return constant(k) / x; }

UncertainVector pow(const UncertainVector& x, double k) {
  return propagate_binary(BinaryFn::pow, x, constant(k));
}
UncertainVector pow(const UncertainVector& x, const UncertainVector& y) {
  return propagate_binary(BinaryFn::pow, x, y);
}

}  // namespace unc
