#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "unc/core.hpp"
#include "unc/error.hpp"

using namespace unc;

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

TEST(UncertainVector, StoresValuesAndErrors) {
  const UncertainVector x({1.0, 2.0, 3.0}, {0.1, 0.2, 0.3});
  ASSERT_EQ(x.size(), 3u);
  EXPECT_EQ(x[1], (UncertainScalar{2.0, 0.2}));
  EXPECT_EQ(x.at(2).error, 0.3);
  EXPECT_THROW(x.at(3), IndexOutOfBounds);
}

TEST(UncertainVector, RejectsInvalidErrors) {
  EXPECT_THROW(UncertainVector({1.0, 2.0}, {0.1}), LengthMismatch);
  EXPECT_THROW(UncertainVector({1.0}, {-0.1}), NegativeError);
  EXPECT_THROW(UncertainVector({1.0}, {kNaN}), InvalidError);
  EXPECT_THROW(UncertainVector({1.0}, {kInf}), InvalidError);
}

TEST(UncertainVector, NaNValueForcesNaNError) {
  const UncertainVector x({kNaN, 1.0}, {0.5, 0.5});
  EXPECT_TRUE(std::isnan(x[0].error));
  EXPECT_EQ(x[1].error, 0.5);
}

TEST(UncertainVector, ExactHasZeroErrors) {
  const auto x = UncertainVector::exact({1.0, 2.0});
  EXPECT_EQ(get_errors(x), (std::vector<double>{0.0, 0.0}));
}

TEST(MakeUncertain, BroadcastsScalarError) {
  const std::vector<double> v{1.0, 2.0, 3.0};
  const std::vector<double> e{0.5};
  const auto x = make_uncertain(v, e);
  EXPECT_EQ(get_errors(x), (std::vector<double>{0.5, 0.5, 0.5}));
  EXPECT_EQ(make_uncertain(v, 0.25), make_uncertain({1.0, 2.0, 3.0}, {0.25, 0.25, 0.25}));
}

TEST(MakeUncertain, RejectsNegativeBroadcast) {
  const std::vector<double> v{1.0, 2.0};
  EXPECT_THROW(make_uncertain(v, -1.0), NegativeError);
}

TEST(ErrorBounds, MinMax) {
  const auto x = make_uncertain({1.0, -2.0}, {0.1, 0.5});
  EXPECT_EQ(errors_min(x), (std::vector<double>{0.9, -2.5}));
  EXPECT_EQ(errors_max(x), (std::vector<double>{1.1, -1.5}));
}

TEST(Subset, PicksIndices) {
  const auto x = make_uncertain({1.0, 2.0, 3.0}, {0.1, 0.2, 0.3});
  const std::vector<std::size_t> idx{2, 0};
  EXPECT_EQ(subset(x, idx), make_uncertain({3.0, 1.0}, {0.3, 0.1}));
  const std::vector<std::size_t> bad{3};
  EXPECT_THROW(subset(x, bad), IndexOutOfBounds);
}

TEST(Concat, JoinsParts) {
  const auto a = make_uncertain({1.0}, {0.1});
  const auto b = make_uncertain({2.0, 3.0}, {0.2, 0.3});
  EXPECT_EQ(concat({a, b}), make_uncertain({1.0, 2.0, 3.0}, {0.1, 0.2, 0.3}));
  EXPECT_TRUE(concat({}).empty());
}
