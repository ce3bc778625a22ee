#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "gsqg/quadrature.hpp"

namespace {

using namespace gsqg;
constexpr double kPi = std::numbers::pi;

TEST(Adaptive, PolynomialAndTrig) {
  EXPECT_NEAR(quad::adaptive([](double x) { return x * x; }, 0.0, 3.0).value, 9.0, 1e-12);
  EXPECT_NEAR(quad::adaptive([](double x) { return std::sin(x); }, 0.0, kPi).value, 2.0, 1e-12);
}

TEST(Adaptive, InfiniteUpperLimit) {
  const auto r = quad::adaptive([](double x) { return 1.0 / (1.0 + x * x); }, 0.0,
                                std::numeric_limits<double>::infinity());
  EXPECT_NEAR(r.value, kPi / 2.0, 1e-10);
  EXPECT_GE(r.error, 0.0);
}

TEST(Adaptive, BreaksHandleKinks) {
  const std::vector<double> breaks = {0.3, -5.0, 7.0};
  const auto r = quad::adaptive_with_breaks([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0, breaks);
  EXPECT_NEAR(r.value, 0.5 * (0.09 + 0.49), 1e-13);
}

TEST(EndpointSingular, InverseSquareRoot) {
  EXPECT_NEAR(quad::endpoint_singular([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0).value, 2.0, 1e-10);
  EXPECT_NEAR(quad::endpoint_singular([](double x) { return std::log(x); }, 0.0, 1.0).value, -1.0, 1e-10);
}

TEST(EndpointSingular, WithBreaks) {
  const std::vector<double> breaks = {0.5};
  const auto r = quad::endpoint_singular_with_breaks(
      [](double x) { return 1.0 / std::sqrt(x) + std::abs(x - 0.5); }, 0.0, 1.0, breaks);
  EXPECT_NEAR(r.value, 2.25, 1e-10);
}

}  // namespace
