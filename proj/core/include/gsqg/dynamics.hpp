#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gsqg/analytic.hpp"
#include "gsqg/error.hpp"
#include "gsqg/geometry.hpp"
#include "gsqg/params.hpp"
#include "gsqg/velocity.hpp"

namespace gsqg {

struct SimConfig {
  double dt = 1e-3;
  int n_steps = 1;
  /// Resample after every `resample_every` steps; 0 disables resampling.
  int resample_every = 0;
  /// Uniform resampling gap; ignored when `grading` is set.
  double target_spacing = 0.0;
  std::optional<SpacingField> grading;
  /// Times at which snapshots are kept, besides t = 0.
  std::vector<double> snapshot_times;
  /// Keep a snapshot every k steps when k > 0.
  int snapshot_every = 0;
  double cfl_factor = 0.25;

  void validate() const;
};

/// Largest stable step: min(cfl * h^max(1, alpha), 2 / (k max|v| + omega(k))) with
/// h the smallest node gap, k = pi / h and omega the edge-wave frequency of a
/// straight boundary at wavenumber k.
double dt_limit(const ContourState& state, const GsqgParams& params, double cfl_factor = 0.25);
double dt_limit(const ContourState& state, const GsqgParams& params, double cfl_factor, double max_speed);

/// Edge-wave frequency omega(k) for the kernel with parameter alpha, for a
/// boundary of total length `length`.
double edge_wave_frequency(const GsqgParams& params, double k, double length);

/// One classical RK4 step. |dt| must not exceed dt_limit() with the default factor.
ContourState step(const ContourState& state, const GsqgParams& params, double dt);
/// Same, with an explicit CFL factor.
ContourState step(const ContourState& state, const GsqgParams& params, double dt, double cfl_factor);

struct StepDiagnostics {
  int step = 0;
  double time = 0.0;
  double area = 0.0;
  double perimeter = 0.0;
  double min_kappa = 0.0;
  double max_kappa = 0.0;
  double max_speed = 0.0;
  double spread = 0.0;
};

struct Trajectory {
  std::vector<ContourState> snapshots;
  std::vector<StepDiagnostics> diagnostics;
};

/// A step failure during simulate(), carrying the time and what was computed.
class SimulationError : public Error {
 public:
  SimulationError(const Error& cause, double time, Trajectory partial);
  double time() const noexcept { return time_; }
  const Trajectory& partial() const noexcept { return partial_; }

 private:
  double time_;
  Trajectory partial_;
};

Trajectory simulate(const Contour& initial, const GsqgParams& params, const SimConfig& config);

/// Right side of dk/dt = -2 k (d_s v . T) - (d_s^2 v . N) at every node.
std::vector<double> curvature_rate(const ContourState& state, const GsqgParams& params);
std::vector<double> curvature_rate(const ContourState& state, const VelocityField& field);

struct IntegratingFactorResidual {
  double max_residual = 0.0;
  /// Largest magnitude of either side of the identity.
  double max_term = 0.0;
};

/// Residual of d/dt(E k) + E (d_s^2 v . N) = 0 with E = exp(2 int_0^t d_s v . T)
/// along the snapshots of `trajectory` at a fixed node index, using forward
/// differences in time.
IntegratingFactorResidual integrating_factor_check(const Trajectory& trajectory, std::size_t node_index,
                                                   const GsqgParams& params);

enum class Verdict { downward, upward, indeterminate };
std::string to_string(Verdict v);

struct BendingVerdict {
  Edge edge = Edge::lower;
  Annulus annulus;
  double min_kappa = 0.0;
  double max_kappa = 0.0;
  std::size_t nodes = 0;
  Verdict verdict = Verdict::indeterminate;
};

struct BendingResult {
  BendingVerdict lower;
  BendingVerdict upper;
  Verdict verdict = Verdict::indeterminate;
  double threshold = 0.0;
};

struct ClassifyOptions {
  /// The threshold is max(floor_per_delta / delta, fraction * c |F| t / r^(1+alpha))
  /// with r the outer radius of the sampled window.
  double fraction = 0.1;
  double floor_per_delta = 1e-8;
  /// The sampled window is [max(m inner, 2 delta), min(outer / m, M/2)].
  double window_margin = 2.0;
};

/// Sign verdict on the nodes whose t = 0 ancestors lie on a straight edge and
/// whose current distance from the origin lies in the window of ClassifyOptions.
BendingResult classify_bending(const ContourState& state, const CornerSpec& spec, const GsqgParams& params,
                               const Annulus& annulus, const ClassifyOptions& options = {});

struct ConvexityOptions {
  double tangency_a = 0.0;
  Edge edge = Edge::lower;
  double nodes_per_unit = 0.0;
  SamplingOptions sampling;
  /// Breaking means min k < -threshold, threshold = fraction * c |F| t / a^(1+alpha).
  double fraction = 0.1;
};

struct ConvexityReport {
  double initial_min_kappa = 0.0;
  bool broken = false;
  double breaking_time = 0.0;
  Vec2 breaking_location;
  double min_kappa_at_break = 0.0;
  /// Curvature of node 0 (the tangency node of a convexified patch) in the same snapshot.
  double kappa_node0_at_break = 0.0;
  double threshold = 0.0;
  std::size_t nodes = 0;
  double symmetric_difference = 0.0;
};

/// Builds the convexified patch, checks min k >= 0 at t = 0, simulates, and
/// reports the first snapshot with min k below -threshold.
ConvexityReport convexity_breaking_run(const CornerSpec& spec, const GsqgParams& params, double epsilon,
                                       const SimConfig& config, const ConvexityOptions& options);
/// The same pipeline on an arbitrary initial contour, with an absolute threshold rate
/// (threshold = rate_scale * t).
ConvexityReport convexity_breaking_run(const Contour& initial, const GsqgParams& params, const SimConfig& config,
                                       double rate_scale);

}  // namespace gsqg
