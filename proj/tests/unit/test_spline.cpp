#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "gsqg/spline.hpp"

namespace {

using namespace gsqg;
constexpr double kPi = std::numbers::pi;

TEST(PeriodicSpline, InterpolatesKnots) {
  std::vector<double> t, y;
  for (int i = 0; i < 12; ++i) {
    t.push_back(2.0 * kPi * i / 12.0 + 0.05 * std::sin(i));
    y.push_back(std::cos(t.back()));
  }
  const PeriodicSpline s(t, 2.0 * kPi, y);
  for (std::size_t i = 0; i < t.size(); ++i) EXPECT_NEAR(s(t[i]), y[i], 1e-14);
}

TEST(PeriodicSpline, FourthOrderOnSmoothData) {
  auto error = [](int n) {
    std::vector<double> t, y;
    for (int i = 0; i < n; ++i) {
      t.push_back(2.0 * kPi * i / n);
      y.push_back(std::sin(t.back()));
    }
    const PeriodicSpline s(t, 2.0 * kPi, y);
    double e = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const double x = 2.0 * kPi * (k + 0.37) / 1000.0;
      e = std::max(e, std::abs(s(x) - std::sin(x)));
    }
    return e;
  };
  const double rate = std::log2(error(32) / error(64));
  EXPECT_GT(rate, 3.7);
}

TEST(PeriodicSpline, WrapsAndDifferentiates) {
  std::vector<double> t, y;
  for (int i = 0; i < 64; ++i) {
    t.push_back(2.0 * kPi * i / 64.0);
    y.push_back(std::sin(t.back()));
  }
  const PeriodicSpline s(t, 2.0 * kPi, y);
  EXPECT_NEAR(s(1.0 + 2.0 * kPi), s(1.0), 1e-13);
  EXPECT_NEAR(s(-1.0), s(2.0 * kPi - 1.0), 1e-13);
  EXPECT_NEAR(s.derivative(0.7), std::cos(0.7), 1e-4);
}

TEST(ClosedCurveSpline, CircleThroughPoints) {
  std::vector<Vec2> p;
  for (int i = 0; i < 48; ++i) p.push_back({std::cos(2 * kPi * i / 48), std::sin(2 * kPi * i / 48)});
  const ClosedCurveSpline c(p);
  EXPECT_EQ(c.knots().size(), p.size());
  for (int k = 0; k < 100; ++k) {
    const double t = c.period() * k / 100.0;
    EXPECT_NEAR(norm(c(t)), 1.0, 1e-5);
  }
  EXPECT_NEAR(c.period(), 48.0 * 2.0 * std::sin(kPi / 48.0), 1e-12);
}

}  // namespace
