#pragma once

#include <cmath>
#include <cstddef>

#include "gsqg/analytic.hpp"
#include "gsqg/dynamics.hpp"
#include "gsqg/geometry.hpp"

namespace gsqg::test {

struct BendingRun {
  BendingResult result;
  std::size_t nodes = 0;
  int steps = 0;
  double time = 0.0;
  double area_drift = 0.0;
};

/// Corner patch (delta = 0.01, M = 1) evolved to t1 = 0.1 delta^(1+alpha) without
/// resampling and classified there. `refine` multiplies the node density and
/// `dt_divisor` the number of steps.
inline BendingRun bending_run(double alpha, double beta, double refine = 1.0, int dt_divisor = 1) {
  const CornerSpec spec{beta, 0.01, 1.0};
  const GsqgParams params{alpha, 1.0};
  SamplingOptions so;
  so.growth /= refine;
  so.max_spacing_fraction /= refine;
  const Contour c = build_corner_patch(spec, refine * 16.0 / spec.delta, so);
  const ContourState st = frame(c);
  const double t1 = 0.1 * std::pow(spec.delta, 1.0 + alpha);
  const int n = dt_divisor * static_cast<int>(std::ceil(t1 / (0.5 * dt_limit(st, params))));
  SimConfig cfg;
  cfg.dt = t1 / n;
  cfg.n_steps = n;
  cfg.snapshot_every = n;
  const Trajectory traj = simulate(c, params, cfg);
  BendingRun out;
  out.result = classify_bending(traj.snapshots.back(), spec, params, annulus(alpha, beta, spec.delta, spec.M));
  out.nodes = c.size();
  out.steps = n;
  out.time = traj.snapshots.back().time;
  const double a0 = traj.diagnostics.front().area;
  for (const StepDiagnostics& d : traj.diagnostics) out.area_drift = std::max(out.area_drift, std::abs(d.area - a0) / a0);
  return out;
}

}  // namespace gsqg::test
