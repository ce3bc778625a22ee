#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "gsqg/analytic.hpp"
#include "gsqg/dynamics.hpp"
#include "gsqg/oracle.hpp"
#include "gsqg/velocity.hpp"
#include "support/helpers.hpp"
#include "support/scenarios.hpp"

namespace {

using namespace gsqg;
using gsqg::test::kind_of;

SimConfig steps_of(const ContourState& st, const GsqgParams& params, int n, double fraction = 0.5) {
  SimConfig cfg;
  cfg.dt = fraction * dt_limit(st, params);
  cfg.n_steps = n;
  cfg.snapshot_every = 1;
  return cfg;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

TEST(SimConfig, Validation) {
  SimConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.dt = 0.0;
  EXPECT_EQ(kind_of([&] { cfg.validate(); }), ErrorKind::invalid_parameter);
  cfg = {};
  cfg.n_steps = -1;
  EXPECT_EQ(kind_of([&] { cfg.validate(); }), ErrorKind::invalid_parameter);
  cfg = {};
  cfg.resample_every = 5;
  EXPECT_EQ(kind_of([&] { cfg.validate(); }), ErrorKind::invalid_parameter);
  cfg.target_spacing = 0.01;
  EXPECT_NO_THROW(cfg.validate());
}

TEST(Step, RejectsStepAboveCflLimit) {
  const GsqgParams params{0.5, 1.0};
  const ContourState st = frame(test::circle(128));
  const double lim = dt_limit(st, params);
  EXPECT_EQ(kind_of([&] { step(st, params, 4.0 * lim); }), ErrorKind::cfl_violation);
  EXPECT_NO_THROW(step(st, params, 0.9 * lim));
}

TEST(Step, LimitShrinksWithAlpha) {
  const ContourState st = frame(test::circle(256));
  double prev = 1e300;
  for (double alpha : {0.0, 0.5, 1.0, 1.5}) {
    const double lim = dt_limit(st, GsqgParams{alpha, 1.0});
    EXPECT_GT(lim, 0.0);
    EXPECT_LT(lim, prev);
    prev = lim;
  }
}

class CircleRun : public ::testing::TestWithParam<double> {};

TEST_P(CircleRun, RadiusAndCurvatureStayPut) {
  const GsqgParams params{GetParam(), 1.0};
  const Contour c = test::circle(128);
  const ContourState st = frame(c);
  const Trajectory tr = simulate(c, params, steps_of(st, params, 10));
  ASSERT_EQ(tr.snapshots.size(), 11u);
  for (const ContourState& s : tr.snapshots)
    for (const Vec2& p : s.contour.nodes) EXPECT_NEAR(norm(p), 1.0, 1e-6);
  EXPECT_LT(max_abs(curvature_rate(st, params)), 1e-3 * max_abs(contour_velocity(st, params).lambda) + 1e-3);
}

INSTANTIATE_TEST_SUITE_P(Alphas, CircleRun, ::testing::Values(0.0, 0.5, 1.0, 1.5));

TEST(Simulate, ZeroStepsReturnsInitialFrame) {
  const Contour c = test::ellipse(64, 1.5, 1.0);
  SimConfig cfg;
  cfg.n_steps = 0;
  const Trajectory tr = simulate(c, GsqgParams{0.5, 1.0}, cfg);
  ASSERT_EQ(tr.snapshots.size(), 1u);
  const ContourState ref = frame(c);
  EXPECT_EQ(tr.snapshots[0].contour.nodes.size(), ref.size());
  for (std::size_t i = 0; i < ref.size(); ++i) EXPECT_EQ(tr.snapshots[0].curvature[i], ref.curvature[i]);
  EXPECT_EQ(tr.snapshots[0].time, 0.0);
}

TEST(Simulate, EllipseConservesAreaAndIsReversible) {
  const GsqgParams params{0.5, 1.0};
  const Contour c = test::uniform_ellipse(160, 1.5, 1.0);
  const ContourState st = frame(c);
  const SimConfig cfg = steps_of(st, params, 20);
  const Trajectory tr = simulate(c, params, cfg);
  const double a0 = signed_area(c.nodes);
  for (const StepDiagnostics& d : tr.diagnostics) EXPECT_LT(std::abs(d.area - a0) / a0, 1e-6);
  SimConfig back = cfg;
  back.dt = -cfg.dt;
  const Trajectory rev = simulate(tr.snapshots.back().contour, params, back);
  double err = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) err = std::max(err, norm(rev.snapshots.back().contour.nodes[i] - c.nodes[i]));
  EXPECT_LT(err, 1e-8);
  EXPECT_NEAR(rev.snapshots.back().time, -tr.snapshots.back().time, 1e-15);
}

TEST(Simulate, SnapshotTimesAndResampling) {
  const GsqgParams params{0.0, 1.0};
  const Contour c = test::uniform_ellipse(128, 1.5, 1.0);
  SimConfig cfg;
  cfg.dt = 0.5 * dt_limit(frame(c), params);
  cfg.n_steps = 12;
  cfg.snapshot_times = {4 * cfg.dt, 8 * cfg.dt};
  cfg.resample_every = 3;
  cfg.target_spacing = perimeter(c.nodes) / 100.0;
  const Trajectory tr = simulate(c, params, cfg);
  ASSERT_EQ(tr.snapshots.size(), 3u);
  EXPECT_NEAR(tr.snapshots[1].time, 4 * cfg.dt, 1e-12);
  EXPECT_EQ(tr.diagnostics.size(), 13u);
  EXPECT_NE(tr.snapshots[2].size(), c.size());
  for (std::size_t i = 0; i < tr.snapshots[2].size(); ++i) {
    const Vec2 a = tr.snapshots[2].contour.ancestors[i];
    EXPECT_NEAR(a.x * a.x / 2.25 + a.y * a.y, 1.0, 1e-3);
  }
}

TEST(Simulate, FailureCarriesPartialTrajectory) {
  const GsqgParams params{0.5, 1.0};
  const Contour c = test::circle(64);
  SimConfig cfg;
  cfg.dt = 50.0 * dt_limit(frame(c), params);
  cfg.n_steps = 3;
  try {
    simulate(c, params, cfg);
    FAIL() << "no error";
  } catch (const SimulationError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::cfl_violation);
    EXPECT_EQ(e.time(), 0.0);
    EXPECT_EQ(e.partial().snapshots.size(), 1u);
  }
}

TEST(Lambda, KeepsSpreadSmallAtAlphaOne) {
  const GsqgParams params{1.0, 1.0};
  const Contour c = test::uniform_ellipse(200, 1.5, 1.0);
  const Trajectory tr = simulate(c, params, steps_of(frame(c), params, 10));
  for (const StepDiagnostics& d : tr.diagnostics) EXPECT_LT(d.spread, 0.01) << d.step;
}

TEST(CurvatureRate, MatchesOracleOnLowerEdge) {
  const CornerSpec spec{0.0, 0.01, 1.0};
  const GsqgParams params{1.0, 1.0};
  const double a = annulus(1.0, 0.0, spec.delta, spec.M).mid_radius();
  SamplingOptions so;
  so.lower_pins = {a};
  const ContourState st = frame(build_corner_patch(spec, 16.0 / spec.delta, so));
  const CrossValidation cv = cross_validate(st, spec, params, a);
  const double rate = curvature_rate(st, params)[cv.node];
  EXPECT_LT(std::abs(rate - cv.d2_oracle), 0.1 * std::abs(cv.d2_oracle));
  EXPECT_LT(rate, 0.0);
}

TEST(CurvatureRate, MatchesTimeDifferences) {
  for (double alpha : {0.0, 0.5, 1.0}) {
    const GsqgParams params{alpha, 1.0};
    const ContourState st = frame(test::uniform_ellipse(256, 1.5, 1.0));
    const double dt = 0.25 * dt_limit(st, params);
    const ContourState fwd = step(st, params, dt), bwd = step(st, params, -dt);
    const std::vector<double> rate = curvature_rate(st, params);
    const double scale = max_abs(rate);
    for (std::size_t i = 0; i < st.size(); ++i) {
      const double fd = (fwd.curvature[i] - bwd.curvature[i]) / (2.0 * dt);
      if (std::abs(rate[i]) < 0.05 * scale) continue;
      EXPECT_LT(std::abs(fd - rate[i]), 0.1 * std::abs(rate[i])) << alpha << " node " << i;
    }
  }
}

TEST(IntegratingFactor, CircleResidualVanishes) {
  const GsqgParams params{0.5, 1.0};
  const Contour c = test::circle(128);
  const Trajectory tr = simulate(c, params, steps_of(frame(c), params, 4));
  const IntegratingFactorResidual r = integrating_factor_check(tr, 5, params);
  EXPECT_LT(r.max_residual, 1e-6);
}

TEST(IntegratingFactor, EllipseResidualIsFirstOrder) {
  const GsqgParams params{0.0, 1.0};
  // Node 64 of 512 sits away from the vertices, where both sides of the identity are large.
  const Contour c = test::uniform_ellipse(512, 1.5, 1.0);
  const double dt = 0.5 * dt_limit(frame(c), params);
  std::vector<double> res;
  for (int k : {1, 2}) {
    SimConfig cfg;
    cfg.dt = dt / k;
    cfg.n_steps = 4 * k;
    cfg.snapshot_every = 1;
    const IntegratingFactorResidual r = integrating_factor_check(simulate(c, params, cfg), 64, params);
    EXPECT_LT(r.max_residual, 0.1 * r.max_term);
    res.push_back(r.max_residual);
  }
  EXPECT_NEAR(res[1] / res[0], 0.5, 0.15);
  EXPECT_EQ(kind_of([&] { integrating_factor_check(Trajectory{}, 0, params); }), ErrorKind::invalid_parameter);
}

TEST(Classify, EulerAndSqgEndpoints) {
  const test::BendingRun euler = test::bending_run(0.0, 1.0);
  EXPECT_EQ(euler.result.verdict, Verdict::downward);
  EXPECT_GT(euler.result.lower.nodes, 10u);
  EXPECT_GT(euler.result.upper.nodes, 10u);
  EXPECT_LT(euler.area_drift, 1e-3);
  const test::BendingRun sqg = test::bending_run(1.0, 0.0);
  EXPECT_EQ(sqg.result.verdict, Verdict::upward);
  EXPECT_EQ(to_string(Verdict::indeterminate), "indeterminate");
}

TEST(Classify, IndeterminateAtTimeZeroAndDegenerateWindow) {
  const CornerSpec spec{1.0, 0.01, 1.0};
  const GsqgParams params{0.0, 1.0};
  const ContourState st = frame(build_corner_patch(spec, 1600.0));
  const Annulus ann = annulus(0.0, 1.0, spec.delta, spec.M);
  EXPECT_EQ(classify_bending(st, spec, params, ann).verdict, Verdict::indeterminate);
  ClassifyOptions wide;
  wide.window_margin = 100.0;
  EXPECT_EQ(kind_of([&] { classify_bending(st, spec, params, ann, wide); }), ErrorKind::degenerate_annulus);
}

TEST(Convexity, BreaksForSqgCorner) {
  const CornerSpec spec{0.0, 0.01, 1.0};
  const GsqgParams params{1.0, 1.0};
  const double a = annulus(1.0, 0.0, spec.delta, spec.M).mid_radius();
  const Contour initial = build_convexified_patch(spec, 0.05, a);
  const double t1 = 1e-5;
  SimConfig cfg;
  cfg.n_steps = static_cast<int>(std::ceil(t1 / (0.5 * dt_limit(frame(initial), params))));
  cfg.dt = t1 / cfg.n_steps;
  cfg.snapshot_every = cfg.n_steps;
  ConvexityOptions opt;
  opt.tangency_a = a;
  const ConvexityReport rep = convexity_breaking_run(spec, params, 0.05, cfg, opt);
  EXPECT_GE(rep.initial_min_kappa, -1e-6);
  EXPECT_TRUE(rep.broken);
  EXPECT_LT(rep.min_kappa_at_break, -rep.threshold);
  EXPECT_LT(rep.kappa_node0_at_break, -rep.threshold);
  EXPECT_LT(rep.symmetric_difference, 0.05);
  opt.tangency_a = 0.9 * annulus(1.0, 0.0, spec.delta, spec.M).inner_radius;
  EXPECT_EQ(kind_of([&] { convexity_breaking_run(spec, params, 0.05, cfg, opt); }), ErrorKind::probe_out_of_range);
}

TEST(Convexity, CircleDoesNotBreak) {
  const GsqgParams params{1.0, 1.0};
  const Contour c = test::circle(128);
  const ConvexityReport rep = convexity_breaking_run(c, params, steps_of(frame(c), params, 20), 1.0);
  EXPECT_FALSE(rep.broken);
  std::vector<Vec2> dent = c.nodes;
  dent[0] = 0.9 * dent[0];
  EXPECT_EQ(kind_of([&] { convexity_breaking_run(Contour::from_nodes(dent), params, SimConfig{}, 1.0); }),
            ErrorKind::invalid_contour);
}

}  // namespace
