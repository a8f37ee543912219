#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "unc/error.hpp"
#include "unc/summaries.hpp"

using namespace unc;

namespace {

UncertainVector one_to_eight() {
  std::vector<double> v;
  std::vector<double> e;
  for (int i = 1; i <= 8; ++i) {
    v.push_back(i);
    e.push_back(i / 30.0);
  }
  return UncertainVector(v, e);
}

// Two-pass textbook SEM, written independently of the library.
double brute_sem(const std::vector<double>& v) {
  double m = 0;
  for (double x : v) m += x;
  m /= static_cast<double>(v.size());
  double ss = 0;
  for (double x : v) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(v.size() - 1)) / std::sqrt(static_cast<double>(v.size()));
}

}  // namespace

TEST(Summaries, SumAndProd) {
  const auto s = sum(one_to_eight());
  EXPECT_EQ(s.value, 36.0);
  EXPECT_NEAR(s.error, std::sqrt(204.0) / 30.0, 1e-14);
  const auto p = prod(make_uncertain({2.0, 3.0}, {0.1, 0.2}));
  EXPECT_EQ(p.value, 6.0);
  EXPECT_NEAR(p.error, std::hypot(0.3, 0.4), 1e-15);
}

TEST(Summaries, MeanTakesLargerOfSemAndMeanError) {
  const auto m = mean(one_to_eight());
  EXPECT_EQ(m.value, 4.5);
  EXPECT_NEAR(m.error, 0.8660254, 1e-7);

  const auto tight = mean(make_uncertain({1.0, 1.1, 0.9}, {0.5, 0.5, 0.5}));
  EXPECT_DOUBLE_EQ(tight.error, 0.5);
}

TEST(Summaries, MeanOfSingleElementKeepsItsError) {
  EXPECT_EQ(mean(make_uncertain({3.0}, {0.2})), (UncertainScalar{3.0, 0.2}));
  EXPECT_THROW(mean(UncertainVector{}), EmptyInput);
}

TEST(Summaries, MeanAgainstBruteForce) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> len(2, 50);
  std::normal_distribution<double> val(10.0, 3.0);
  std::uniform_real_distribution<double> err(0.0, 1.5);
  for (int k = 0; k < 100; ++k) {
    std::vector<double> v(static_cast<std::size_t>(len(rng)));
    std::vector<double> e(v.size());
    for (auto& x : v) x = val(rng);
    for (auto& x : e) x = err(rng);
    double mean_err = 0;
    for (double x : e) mean_err += x;
    mean_err /= static_cast<double>(e.size());
    const double oracle = std::max(brute_sem(v), mean_err);
    EXPECT_NEAR(mean(UncertainVector(v, e)).error, oracle, 1e-12 * oracle);
  }
}

TEST(Summaries, MedianErrorScalesMeanError) {
  const auto x = one_to_eight();
  const auto md = median(x);
  EXPECT_EQ(md.value, 4.5);
  EXPECT_EQ(md.error, mean(x).error * kMedianErrorFactor);
  EXPECT_NEAR(md.error, 1.0854019, 1e-7);
  EXPECT_NEAR(md.error / mean(x).error, std::sqrt(std::numbers::pi / 2), 4e-16);
  EXPECT_EQ(median(make_uncertain({3.0, 1.0, 2.0}, {0.0, 0.0, 0.0})).value, 2.0);
}

TEST(Summaries, WeightedMean) {
  const auto x = make_uncertain({1.0, 3.0}, {0.1, 0.1});
  const std::vector<double> w{1.0, 3.0};
  const auto r = weighted_mean(x, w);
  EXPECT_DOUBLE_EQ(r.value, 2.5);
  EXPECT_NEAR(r.error, std::sqrt(1.25), 1e-12);
}

TEST(Summaries, UniformWeightsReproduceMean) {
  const auto x = one_to_eight();
  const std::vector<double> ones(8, 1.0);
  const std::vector<double> fives(8, 5.0);
  EXPECT_EQ(weighted_mean(x, ones), mean(x));
  EXPECT_EQ(weighted_mean(x, fives), mean(x));
}

TEST(Summaries, WeightedMeanRejectsBadWeights) {
  const auto x = make_uncertain({1.0, 2.0}, {0.1, 0.1});
  const std::vector<double> negative{1.0, -1.0};
  const std::vector<double> zeros{0.0, 0.0};
  const std::vector<double> short_w{1.0};
  EXPECT_THROW(weighted_mean(x, negative), InvalidArgument);
  EXPECT_THROW(weighted_mean(x, zeros), ZeroWeightSum);
  EXPECT_THROW(weighted_mean(x, short_w), LengthMismatch);
}

TEST(Summaries, MinMaxRange) {
  const auto x = make_uncertain({2.0, -1.0, 5.0}, {0.1, 0.2, 0.3});
  EXPECT_EQ(min(x), (UncertainScalar{-1.0, 0.2}));
  EXPECT_EQ(max(x), (UncertainScalar{5.0, 0.3}));
  EXPECT_EQ(range(x), make_uncertain({-1.0, 5.0}, {0.2, 0.3}));
}

TEST(Summaries, DegenerateWeightsPickOneElement) {
  const auto x = make_uncertain({1.0, 4.0, 9.0}, {0.2, 0.5, 0.5});
  const std::vector<double> w{1.0, 0.0, 0.0};
  EXPECT_EQ(weighted_mean(x, w), (UncertainScalar{1.0, 0.2}));
  EXPECT_EQ(prod(make_uncertain({2.0, 3.0}, {0.0, 0.3})), (UncertainScalar{6.0, 0.6}));
}
