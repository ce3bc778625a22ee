#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "gsqg/analytic.hpp"
#include "gsqg/geometry.hpp"
#include "gsqg/oracle.hpp"
#include "gsqg/velocity.hpp"
#include "support/helpers.hpp"

namespace {

using namespace gsqg;
using gsqg::test::kind_of;
constexpr double kPi = std::numbers::pi;

double max_speed(const std::vector<Vec2>& v) {
  double m = 0.0;
  for (const Vec2& u : v) m = std::max(m, norm(u));
  return m;
}

class AlphaSweep : public ::testing::TestWithParam<double> {};

TEST_P(AlphaSweep, CircleHasNoNormalVelocity) {
  const GsqgParams params{GetParam(), 1.0};
  const ContourState st = frame(test::circle(256));
  const VelocityField f = contour_velocity(st, params);
  const double vmax = max_speed(f.v);
  ASSERT_GT(vmax, 0.0);
  for (std::size_t i = 0; i < st.size(); ++i) EXPECT_LT(std::abs(dot(f.v[i], st.normal[i])), 1e-3 * vmax);
}

TEST_P(AlphaSweep, TranslationInvariant) {
  const GsqgParams params{GetParam(), 1.0};
  const Contour a = test::uniform_ellipse(200, 1.5, 1.0);
  Contour b = a;
  for (Vec2& p : b.nodes) p += Vec2{3.0, -2.0};
  const auto va = contour_velocity(frame(a), params).v;
  const auto vb = contour_velocity(frame(b), params).v;
  const double vmax = max_speed(va);
  for (std::size_t i = 0; i < va.size(); ++i) EXPECT_LT(norm(va[i] - vb[i]), 1e-10 * vmax);
}

TEST_P(AlphaSweep, DilationScaling) {
  const GsqgParams params{GetParam(), 1.0};
  const Contour a = test::uniform_ellipse(200, 1.5, 1.0);
  Contour b = a;
  for (Vec2& p : b.nodes) p *= 2.0;
  const auto va = contour_velocity(frame(a), params).v;
  const auto vb = contour_velocity(frame(b), params).v;
  const double factor = std::pow(2.0, 1.0 - GetParam());
  const double vmax = max_speed(va);
  for (std::size_t i = 0; i < va.size(); ++i) EXPECT_LT(norm(vb[i] - factor * va[i]), 1e-9 * factor * vmax);
}

TEST_P(AlphaSweep, LambdaVanishesBelowOne) {
  const GsqgParams params{GetParam(), 1.0};
  const VelocityField f = contour_velocity(frame(test::uniform_ellipse(128, 1.5, 1.0)), params);
  ASSERT_EQ(f.lambda.size(), 128u);
  if (GetParam() < 1.0) {
    for (double l : f.lambda) EXPECT_EQ(l, 0.0);
  } else {
    EXPECT_EQ(f.lambda.front(), 0.0);
  }
}

INSTANTIATE_TEST_SUITE_P(Alphas, AlphaSweep, ::testing::Values(0.0, 0.5, 1.0, 1.5));

TEST(Velocity, CircleIsRigidRotationWithSmallLambda) {
  const GsqgParams params{1.0, 1.0};
  const ContourState st = frame(test::circle(256));
  const VelocityField f = contour_velocity(st, params);
  const double vmax = max_speed(f.v);
  for (std::size_t i = 0; i < st.size(); ++i) {
    EXPECT_LT(std::abs(f.lambda[i]), 1e-6 * vmax);
    EXPECT_NEAR(dot(f.v[i], st.tangent[i]), dot(f.v[0], st.tangent[0]), 1e-6 * vmax);
  }
}

TEST(Velocity, LambdaKeepsParametrizationUniform) {
  const GsqgParams params{1.0, 1.0};
  const Contour c = test::uniform_ellipse(256, 1.5, 1.0);
  const ContourState st = frame(c);
  const VelocityField f = contour_velocity(st, params);
  const std::vector<Vec2> dg = label_derivative(c.nodes, c.labels);
  const std::vector<Vec2> du = label_derivative(f.v, c.labels);
  // d/dt |d0 gamma|^2 is proportional to |d0 gamma|^2 when the parametrization stays uniform.
  std::vector<double> rate(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) rate[i] = dot(dg[i], du[i]) / dot(dg[i], dg[i]);
  const auto [lo, hi] = std::minmax_element(rate.begin(), rate.end());
  const double vmax = max_speed(f.v);
  EXPECT_LT(*hi - *lo, 1e-2 * vmax);
}

TEST(Velocity, LambdaFromVelocityEndpoints) {
  const Contour c = test::circle(64);
  std::vector<Vec2> u(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) u[i] = c.nodes[i] * (1.0 + 0.3 * std::cos(2.0 * c.labels[i]));
  const std::vector<double> l = lambda_from_velocity(c.nodes, c.labels, u);
  EXPECT_EQ(l.front(), 0.0);
  const std::vector<Vec2> dg = label_derivative(c.nodes, c.labels);
  // After adding lambda d0 gamma the tangential stretching rate is uniform to discretization error.
  std::vector<double> rate(c.size());
  const std::vector<Vec2> dl = label_derivative(
      [&] {
        std::vector<Vec2> w(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) w[i] = u[i] + l[i] * dg[i];
        return w;
      }(),
      c.labels);
  for (std::size_t i = 0; i < c.size(); ++i) rate[i] = dot(dg[i], dl[i]) / dot(dg[i], dg[i]);
  const auto [lo, hi] = std::minmax_element(rate.begin(), rate.end());
  EXPECT_LT(*hi - *lo, 0.05);
}

TEST(Velocity, CrossValidatesAgainstOracle) {
  for (double alpha : {0.0, 0.5}) {
    const CornerSpec spec{1.0, 0.01, 1.0};
    const GsqgParams params{alpha, 1.0};
    const double a = annulus(alpha, 1.0, spec.delta, spec.M).mid_radius();
    SamplingOptions so;
    so.lower_pins = {a};
    const ContourState st = frame(build_corner_patch(spec, 16.0 / spec.delta, so));
    const CrossValidation cv = cross_validate(st, spec, params, a);
    EXPECT_LT(cv.v2_rel, 0.02) << alpha;
    EXPECT_LT(cv.d2_rel, 0.1) << alpha;
    EXPECT_EQ(kind_of([&] { cross_validate(st, spec, params, a * 1.01); }), ErrorKind::node_not_found);
  }
}

TEST(Velocity, RejectsNonuniformParametrizationAtAlphaOne) {
  Contour c = test::ellipse(128, 3.0, 1.0);
  for (std::size_t i = 0; i < c.size(); ++i) c.labels[i] = -kPi + 2.0 * kPi * static_cast<double>(i) / 128.0;
  EXPECT_GT(parametrization_spread(c.nodes, c.labels), 0.01);
  EXPECT_EQ(kind_of([&] { contour_velocity(frame(c), GsqgParams{1.0, 1.0}); }),
            ErrorKind::nonuniform_parametrization);
  EXPECT_NO_THROW(contour_velocity(frame(c), GsqgParams{0.5, 1.0}));
}

TEST(Velocity, RejectsUnresolvedSingularity) {
  std::vector<Vec2> nodes = test::circle(64).nodes;
  const Vec2 p = nodes[10] + 0.05 * (nodes[11] - nodes[10]);
  nodes.insert(nodes.begin() + 11, p);
  const Contour c = Contour::from_nodes(nodes);
  EXPECT_EQ(kind_of([&] { contour_velocity(c.nodes, c.labels, GsqgParams{0.5, 1.0}); }),
            ErrorKind::unresolved_singularity);
}

TEST(Velocity, RejectsSelfIntersection) {
  std::vector<Vec2> nodes;
  for (int i = 0; i < 64; ++i) {
    const double t = -kPi + 2 * kPi * i / 64;
    nodes.push_back({std::cos(t), std::sin(2 * t) * 0.5});
  }
  const Contour c = Contour::from_nodes(nodes);
  EXPECT_EQ(kind_of([&] { contour_velocity(c.nodes, c.labels, GsqgParams{0.5, 1.0}); }),
            ErrorKind::self_intersection);
}

TEST(ArcDerivatives, ExactOnQuadraticsAlongCircle) {
  const ContourState st = frame(test::circle(512));
  std::vector<Vec2> f(st.size());
  for (std::size_t i = 0; i < st.size(); ++i) f[i] = st.contour.nodes[i];
  const auto d1 = arc_derivative(st, f);
  const auto d2 = arc_second_derivative(st, f);
  for (std::size_t i = 0; i < st.size(); i += 37) {
    EXPECT_NEAR(norm(d1[i] - st.tangent[i]), 0.0, 1e-4);
    EXPECT_NEAR(norm(d2[i] + st.contour.nodes[i]), 0.0, 1e-4);
  }
}

}  // namespace
