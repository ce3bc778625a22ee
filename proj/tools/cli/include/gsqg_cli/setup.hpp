#pragma once

#include <string>

#include "gsqg/dynamics.hpp"
#include "gsqg/geometry.hpp"
#include "gsqg/params.hpp"
#include "gsqg_cli/config.hpp"

namespace gsqg::cli {

enum class ShapeKind { corner, circle, ellipse };

/// Everything `simulate` and `convexity` read from a config file.
struct RunSetup {
  GsqgParams params;
  ShapeKind shape = ShapeKind::corner;
  CornerSpec spec;
  double nodes_per_unit = 0.0;
  SamplingOptions sampling;
  double radius = 1.0;
  double semi_major = 1.0;
  double semi_minor = 0.5;
  int nodes = 256;
  SimConfig sim;
  /// Total simulated time; when positive, n_steps = ceil(horizon / dt).
  double horizon = 0.0;
  /// dt = dt_fraction * dt_limit(initial) when the config gives no dt.
  double dt_fraction = 0.5;
  int seed = 0;

  double epsilon = 0.05;
  double tangency_a = 0.0;
  Edge edge = Edge::lower;
  double fraction = 0.1;
  /// Absolute threshold rate for non-corner convexity runs.
  double rate_scale = 1.0;
};

/// Reads and validates a setup. Unknown keys are a parse error.
RunSetup read_setup(const KeyValueConfig& config);

/// The t = 0 contour of a setup.
Contour initial_contour(const RunSetup& setup);

/// Fills dt (if unset) and n_steps (if a horizon is given) from the initial contour.
/// Without snapshot_times or snapshot_every, the final state is the only snapshot after t = 0.
void resolve_time_stepping(RunSetup& setup, const Contour& initial);

std::string to_string(ShapeKind kind);

}  // namespace gsqg::cli
