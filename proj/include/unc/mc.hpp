#pragma once

// Monte Carlo propagation, used as an independent check on the first-order
// rules.
//
// Inputs are independent normals N(value, error²). Sampling is split into
// kMcChunks fixed chunks; chunk c draws from its own MT19937-64 engine seeded
// with seed_seq{seed low word, seed high word, c} and converts uniforms to
// normals with the Marsaglia polar method. Results therefore depend only on
// (expression, inputs, config), never on the number of threads.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "unc/expr.hpp"

namespace unc {

inline constexpr std::size_t kMcChunks = 64;
/// Scales the raw median absolute deviation to a normal-consistent sd estimate.
inline constexpr double kMadNormalConsistency = 1.4826;
/// Fraction of non-finite model outputs tolerated before failing.
inline constexpr double kMaxNonFiniteFraction = 0.01;

struct McConfig {
  std::size_t samples = 100000;
  std::uint64_t seed = 0;
  std::vector<double> quantiles{0.025, 0.975};
};

struct McResult {
  double mean = 0.0;
  double sd = 0.0;  // n − 1 denominator
  double median = 0.0;
  double mad = 0.0;
  std::vector<double> quantile_values;  // type-7 (linear interpolation) sample quantiles
  std::size_t used = 0;                 // finite outputs summarized
  std::size_t non_finite = 0;           // excluded outputs

  friend bool operator==(const McResult&, const McResult&) = default;
};

struct TsmMcmReport {
  UncertainScalar tsm;
  McResult mcm;
  double relative_gap = 0.0;  // |tsm.error − mcm.sd| / mcm.sd
};

/// Throws InvalidArgument for samples < 2 or quantiles outside [0, 1].
void validate(const McConfig& cfg);

/// Raw model outputs, one per sample, in sample order. Throws UnboundVariable.
std::vector<double> mc_sample(const Expr& expr, const UncertainEnv& env, const McConfig& cfg);

/// Summary of raw outputs. Non-finite outputs are excluded and counted;
/// more than 1% of them throws NonFiniteSamples.
McResult summarize_samples(std::span<const double> outputs, const McConfig& cfg);

McResult mc_propagate(const Expr& expr, const UncertainEnv& env, const McConfig& cfg);

/// Runs the first-order rules and the sampler on the same inputs.
TsmMcmReport compare_tsm_mcm(const Expr& expr, const UncertainEnv& env, const McConfig& cfg);

namespace serial {
std::vector<double> mc_sample(const Expr& expr, const UncertainEnv& env, const McConfig& cfg);
McResult mc_propagate(const Expr& expr, const UncertainEnv& env, const McConfig& cfg);
}  // namespace serial

}  // namespace unc
