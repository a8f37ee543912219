#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "unc/error.hpp"
#include "unc/expr.hpp"
#include "unc/mc.hpp"

using namespace unc;

namespace {

const UncertainEnv kDivisionEnv{{"x", {5.0, 0.01}}, {"y", {1.0, 0.01}}};

}  // namespace

TEST(MonteCarlo, SameSeedSameSamples) {
  McConfig cfg;
  cfg.samples = 10000;
  cfg.seed = 42;
  const auto ast = parse("x/y");
  EXPECT_EQ(mc_sample(*ast, kDivisionEnv, cfg), mc_sample(*ast, kDivisionEnv, cfg));
  cfg.seed = 43;
  const auto other = mc_sample(*ast, kDivisionEnv, cfg);
  cfg.seed = 42;
  EXPECT_NE(mc_sample(*ast, kDivisionEnv, cfg), other);
}

TEST(MonteCarlo, ParallelMatchesSerialBitwise) {
  McConfig cfg;
  cfg.samples = 50001;
  cfg.seed = 9;
  const auto ast = parse("sin(x) * y + x^2");
  EXPECT_EQ(mc_sample(*ast, kDivisionEnv, cfg), serial::mc_sample(*ast, kDivisionEnv, cfg));
  EXPECT_EQ(mc_propagate(*ast, kDivisionEnv, cfg), serial::mc_propagate(*ast, kDivisionEnv, cfg));
}

TEST(MonteCarlo, DivisionAgreesWithTaylor) {
  McConfig cfg;
  cfg.samples = 400000;
  const auto rep = compare_tsm_mcm(*parse("x/y"), kDivisionEnv, cfg);
  EXPECT_NEAR(rep.tsm.error, 0.0509902, 1e-7);
  EXPECT_NEAR(rep.mcm.sd, 0.0511, 0.001);
  EXPECT_NEAR(rep.mcm.mean, 5.0005, 0.0005);
  EXPECT_LT(rep.relative_gap, 0.02);
  EXPECT_EQ(rep.mcm.used, cfg.samples);
}

TEST(MonteCarlo, LinearModelMomentsAndQuantiles) {
  McConfig cfg;
  cfg.samples = 400000;
  cfg.quantiles = {0.025, 0.5, 0.975};
  const auto r = mc_propagate(*parse("a + 2*b"), {{"a", {1.0, 0.3}}, {"b", {-1.0, 0.2}}}, cfg);
  const double sd = std::hypot(0.3, 0.4);
  EXPECT_NEAR(r.mean, -1.0, 0.005);
  EXPECT_NEAR(r.sd, sd, 0.005);
  EXPECT_NEAR(r.mad, sd, 0.01);
  EXPECT_NEAR(r.quantile_values[0], -1.0 - 1.959964 * sd, 0.01);
  EXPECT_EQ(r.quantile_values[1], r.median);
  EXPECT_NEAR(r.quantile_values[2], -1.0 + 1.959964 * sd, 0.01);
}

TEST(MonteCarlo, NonlinearGapShows) {
  // Var(x²) for x ~ N(1, 0.5²) is 4μ²σ² + 2σ⁴ = 1.125; the first-order value is 1.
  McConfig cfg;
  cfg.samples = 400000;
  const auto rep = compare_tsm_mcm(*parse("x^2"), {{"x", {1.0, 0.5}}}, cfg);
  EXPECT_EQ(rep.tsm.error, 1.0);
  EXPECT_NEAR(rep.mcm.sd, std::sqrt(1.125), 0.01);
  EXPECT_NEAR(rep.mcm.mean, 1.25, 0.01);
  EXPECT_GT(rep.relative_gap, 0.03);
}

TEST(MonteCarlo, SummarizeKnownSample) {
  McConfig cfg;
  cfg.quantiles = {0.0, 0.25, 1.0};
  const std::vector<double> xs{4.0, 1.0, 3.0, 2.0};
  const auto r = summarize_samples(xs, cfg);
  EXPECT_EQ(r.mean, 2.5);
  EXPECT_DOUBLE_EQ(r.sd, std::sqrt(5.0 / 3.0));
  EXPECT_EQ(r.median, 2.5);
  EXPECT_DOUBLE_EQ(r.mad, 1.0 * kMadNormalConsistency);
  EXPECT_EQ(r.quantile_values, (std::vector<double>{1.0, 1.75, 4.0}));
}

TEST(MonteCarlo, TooManyNonFiniteOutputs) {
  McConfig cfg;
  cfg.samples = 10000;
  EXPECT_THROW(mc_propagate(*parse("sqrt(x)"), {{"x", {0.0, 1.0}}}, cfg), NonFiniteSamples);
}

TEST(MonteCarlo, FewNonFiniteOutputsAreDropped) {
  McConfig cfg;
  cfg.samples = 100000;
  // P(x < 0) for N(3, 1) is about 0.00135.
  const auto r = mc_propagate(*parse("sqrt(x)"), {{"x", {3.0, 1.0}}}, cfg);
  EXPECT_GT(r.non_finite, 0u);
  EXPECT_EQ(r.used + r.non_finite, cfg.samples);
}

TEST(MonteCarlo, ValidatesConfig) {
  McConfig cfg;
  cfg.samples = 1;
  EXPECT_THROW(validate(cfg), InvalidArgument);
  cfg.samples = 100;
  cfg.quantiles = {1.5};
  EXPECT_THROW(validate(cfg), InvalidArgument);
  cfg.quantiles = {};
  EXPECT_NO_THROW(validate(cfg));
  EXPECT_THROW(mc_propagate(*parse("x + z"), {{"x", {1.0, 0.1}}}, cfg), UnboundVariable);
}
