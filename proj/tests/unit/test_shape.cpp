#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "gsqg/geometry.hpp"
#include "gsqg/shape.hpp"
#include "support/helpers.hpp"

namespace {

using namespace gsqg;
using gsqg::test::kind_of;
constexpr double kPi = std::numbers::pi;

PiecewiseCurve rounded_square(double side, double t) {
  const std::vector<Vec2> v = {{0, 0}, {side, 0}, {side, side}, {0, side}};
  const std::vector<PieceRole> edges(4, PieceRole::closure_segment), fillets(4, PieceRole::closure_fillet);
  return rounded_polygon(v, {t, t, t, t}, edges, fillets);
}

TEST(RoundedPolygon, ClosedWithExactArea) {
  const double t = 0.2;
  const PiecewiseCurve c = rounded_square(1.0, t);
  EXPECT_EQ(c.piece_count(), 8u);
  EXPECT_NEAR(norm(c.end_point() - c.point(0.0)), 0.0, 1e-14);
  EXPECT_NEAR(c.area(), 1.0 - (4.0 - kPi) * t * t, 1e-13);
  EXPECT_NEAR(c.length(), 4.0 - 8.0 * t + 2.0 * kPi * t, 1e-13);
  double turning = 0.0;
  for (std::size_t i = 0; i < c.piece_count(); ++i) turning += c.piece(i).kappa0 * c.piece(i).length;
  EXPECT_NEAR(turning, 2.0 * kPi, 1e-13);
}

TEST(RoundedPolygon, TangentContinuousAtJunctions) {
  const PiecewiseCurve c = rounded_square(1.0, 0.1);
  for (std::size_t i = 1; i < c.piece_count(); ++i) {
    const double s = c.piece_start(i);
    EXPECT_NEAR(norm(c.tangent(s - 1e-9) - c.tangent(s + 1e-9)), 0.0, 1e-7);
    EXPECT_NEAR(norm(c.point(s - 1e-12) - c.point(s + 1e-12)), 0.0, 1e-10);
  }
}

TEST(RoundedPolygon, RejectsOverlappingFillets) {
  EXPECT_EQ(kind_of([] { rounded_square(1.0, 0.6); }), ErrorKind::invalid_contour);
}

TEST(PiecewiseCurve, ExactQueries) {
  const PiecewiseCurve c = rounded_square(2.0, 0.5);
  EXPECT_NEAR(c.min_y(), 0.0, 1e-14);
  EXPECT_NEAR(c.max_y(), 2.0, 1e-14);
  const auto chord = c.horizontal_chord(1.0);
  ASSERT_TRUE(chord.has_value());
  EXPECT_NEAR(chord->left, 0.0, 1e-12);
  EXPECT_NEAR(chord->right, 2.0, 1e-12);
  EXPECT_FALSE(c.horizontal_chord(3.0).has_value());
  EXPECT_NEAR(c.ray_exit({1.0, 1.0}, {1.0, 0.0}), 1.0, 1e-12);
  EXPECT_NEAR(c.ray_exit({1.0, 1.0}, {0.0, -1.0}), 1.0, 1e-12);
  const double d = std::sqrt(0.5);
  const double corner = std::sqrt(2.0) - (std::sqrt(2.0) - 1.0) * 0.5;
  EXPECT_NEAR(c.ray_exit({1.0, 1.0}, {d, d}), corner, 1e-12);
}

TEST(PiecewiseCurve, BumpAddsCurvatureAndStaysConsistent) {
  const PiecewiseCurve flat = rounded_square(1.0, 0.2);
  std::vector<CurvePiece> pieces;
  for (std::size_t i = 0; i < flat.piece_count(); ++i) pieces.push_back(flat.piece(i));
  const PiecewiseCurve bumped(pieces, {0.3, flat.length()});
  EXPECT_FALSE(bumped.exact());
  const double s = 0.37 * flat.length();
  const double extra = 0.3 * std::pow(std::sin(kPi * s / flat.length()), 2);
  EXPECT_NEAR(bumped.curvature(s), flat.curvature(s) + extra, 1e-12);
  const double h = 1e-5;
  const Vec2 fd = (bumped.point(s + h) - bumped.point(s - h)) / (2.0 * h);
  EXPECT_NEAR(fd.x, bumped.tangent(s).x, 1e-8);
  EXPECT_NEAR(fd.y, bumped.tangent(s).y, 1e-8);
}

TEST(SamplePositions, FollowsSpacingAndKeepsPins) {
  const PiecewiseCurve c = rounded_square(1.0, 0.2);
  const std::vector<double> pins = {0.5, 1.7};
  const std::vector<double> s = sample_positions(c, [](Vec2) { return 0.01; }, pins);
  EXPECT_EQ(s.front(), 0.0);
  for (double p : pins) {
    bool found = false;
    for (double v : s) found = found || std::abs(v - p) < 1e-12;
    EXPECT_TRUE(found) << p;
  }
  for (std::size_t i = 1; i < s.size(); ++i) {
    EXPECT_GT(s[i], s[i - 1]);
    EXPECT_LT(s[i] - s[i - 1], 0.0125);
    EXPECT_GT(s[i] - s[i - 1], 0.0075);
  }
  EXPECT_LT(s.back(), c.length());
}

TEST(PiecewiseCurve, DenseIsEquallySpaced) {
  const PiecewiseCurve c = rounded_square(1.0, 0.25);
  const std::vector<Vec2> p = c.dense(400);
  ASSERT_EQ(p.size(), 400u);
  EXPECT_NEAR(signed_area(p), c.area(), 1e-4);
}

}  // namespace
