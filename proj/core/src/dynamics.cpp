#include "gsqg/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

namespace gsqg {

void SimConfig::validate() const {
  require(std::isfinite(dt) && dt != 0.0, ErrorKind::invalid_parameter, "dt must be finite and nonzero");
  require(n_steps >= 0, ErrorKind::invalid_parameter, "n_steps must be non-negative");
  require(resample_every >= 0 && snapshot_every >= 0, ErrorKind::invalid_parameter,
          "resample_every and snapshot_every must be non-negative");
  require(cfl_factor > 0.0 && std::isfinite(cfl_factor), ErrorKind::invalid_parameter,
          "cfl_factor must be positive");
  if (resample_every > 0) {
    require(grading.has_value() || target_spacing > 0.0, ErrorKind::invalid_parameter,
            "resampling needs target_spacing or a grading field");
  }
  for (double t : snapshot_times) {
    require(std::isfinite(t), ErrorKind::invalid_parameter, "snapshot times must be finite");
  }
}

double edge_wave_frequency(const GsqgParams& params, double k, double length) {
  const double a = params.alpha;
  const double c = params.c_alpha;
  if (a == 0.0) return c * std::numbers::pi;
  if (std::abs(a - 1.0) < 0.05) return 2.0 * c * k * (std::log(std::max(k * length, 1.0)) + 1.0);
  return c * std::abs(2.0 * std::tgamma(1.0 - a) * std::sin(0.5 * std::numbers::pi * a) / a) * std::pow(k, a);
}

namespace {

double min_gap(const ContourState& state) {
  const auto& x = state.contour.nodes;
  double h = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < x.size(); ++i) h = std::min(h, norm(x[(i + 1) % x.size()] - x[i]));
  return h;
}

double max_norm(const std::vector<Vec2>& v) {
  double m = 0.0;
  for (const Vec2& w : v) m = std::max(m, norm(w));
  return m;
}

struct StepOutcome {
  ContourState state;
  double max_speed = 0.0;
};

StepOutcome rk4(const ContourState& state, const GsqgParams& params, double dt, double cfl_factor) {
  const VelocityField f1 = contour_velocity(state, params);
  const double vmax = max_norm(f1.v);
  const double limit = dt_limit(state, params, cfl_factor, vmax);
  require(std::abs(dt) <= limit * (1.0 + 1e-12), ErrorKind::cfl_violation,
          "dt exceeds the stability limit " + std::to_string(limit));

  const auto& x0 = state.contour.nodes;
  const auto& labels = state.contour.labels;
  const std::size_t n = x0.size();
  auto shifted = [&](const std::vector<Vec2>& k, double s) {
    std::vector<Vec2> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = x0[i] + s * k[i];
    return out;
  };
  const auto k1 = f1.v;
  const auto k2 = contour_velocity(shifted(k1, 0.5 * dt), labels, params, false).v;
  const auto k3 = contour_velocity(shifted(k2, 0.5 * dt), labels, params, false).v;
  const auto k4 = contour_velocity(shifted(k3, dt), labels, params, false).v;

  Contour next = state.contour;
  for (std::size_t i = 0; i < n; ++i) {
    next.nodes[i] = x0[i] + (dt / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    require(std::isfinite(next.nodes[i].x) && std::isfinite(next.nodes[i].y), ErrorKind::invalid_contour,
            "non-finite node position");
  }
  require(is_simple(next.nodes), ErrorKind::self_intersection, "contour self-intersects after the step");
  return {frame(next, state.time + dt), vmax};
}

StepDiagnostics diagnose(const ContourState& st, int step_index, double max_speed) {
  StepDiagnostics d;
  d.step = step_index;
  d.time = st.time;
  d.area = signed_area(st.contour.nodes);
  d.perimeter = st.perimeter;
  const auto [lo, hi] = std::minmax_element(st.curvature.begin(), st.curvature.end());
  d.min_kappa = *lo;
  d.max_kappa = *hi;
  d.max_speed = max_speed;
  d.spread = parametrization_spread(st.contour.nodes, st.contour.labels);
  return d;
}

}  // namespace

double dt_limit(const ContourState& state, const GsqgParams& params, double cfl_factor, double max_speed) {
  params.validate();
  const double h = min_gap(state);
  require(h > 0.0, ErrorKind::degenerate_nodes, "coincident nodes");
  const double k = std::numbers::pi / h;
  const double base = cfl_factor * std::pow(h, std::max(1.0, params.alpha));
  const double wave = 2.0 / (k * max_speed + edge_wave_frequency(params, k, state.perimeter));
  return std::min(base, wave);
}

double dt_limit(const ContourState& state, const GsqgParams& params, double cfl_factor) {
  return dt_limit(state, params, cfl_factor, max_norm(contour_velocity(state, params).v));
}

ContourState step(const ContourState& state, const GsqgParams& params, double dt, double cfl_factor) {
  return rk4(state, params, dt, cfl_factor).state;
}

ContourState step(const ContourState& state, const GsqgParams& params, double dt) {
  return step(state, params, dt, 0.25);
}

SimulationError::SimulationError(const Error& cause, double time, Trajectory partial)
    : Error(cause.kind(), std::string(cause.what()).substr(to_string(cause.kind()).size() + 2) +
                              " (t = " + std::to_string(time) + ")"),
      time_(time),
      partial_(std::move(partial)) {}

Trajectory simulate(const Contour& initial, const GsqgParams& params, const SimConfig& config) {
  params.validate();
  config.validate();
  initial.validate();

  std::vector<double> pending = config.snapshot_times;
  std::sort(pending.begin(), pending.end());
  const double tol = 0.5 * std::abs(config.dt);
  std::size_t next_time = 0;
  while (next_time < pending.size() && pending[next_time] <= tol) ++next_time;

  Trajectory traj;
  ContourState st = frame(initial, 0.0);
  traj.snapshots.push_back(st);
  traj.diagnostics.push_back(diagnose(st, 0, max_norm(contour_velocity(st, params).v)));

  for (int s = 1; s <= config.n_steps; ++s) {
    double vmax = 0.0;
    try {
      StepOutcome out = rk4(st, params, config.dt, config.cfl_factor);
      st = std::move(out.state);
      vmax = out.max_speed;
      if (config.resample_every > 0 && s % config.resample_every == 0) {
        Contour c = config.grading ? resample_graded(st.contour, *config.grading)
                                   : resample(st.contour, config.target_spacing);
        st = frame(c, st.time);
      }
    } catch (const Error& e) {
      throw SimulationError(e, st.time, std::move(traj));
    }
    traj.diagnostics.push_back(diagnose(st, s, vmax));

    bool keep = config.snapshot_every > 0 && s % config.snapshot_every == 0;
    while (next_time < pending.size() && pending[next_time] <= st.time + tol) {
      keep = true;
      ++next_time;
    }
    if (keep) traj.snapshots.push_back(st);
  }
  return traj;
}

std::vector<double> curvature_rate(const ContourState& state, const VelocityField& field) {
  require(field.v.size() == state.size(), ErrorKind::invalid_parameter, "velocity size mismatch");
  const auto dv = arc_derivative(state, field.v);
  const auto d2v = arc_second_derivative(state, field.v);
  std::vector<double> rate(state.size());
  for (std::size_t i = 0; i < rate.size(); ++i) {
    rate[i] = -2.0 * state.curvature[i] * dot(dv[i], state.tangent[i]) - dot(d2v[i], state.normal[i]);
  }
  return rate;
}

std::vector<double> curvature_rate(const ContourState& state, const GsqgParams& params) {
  return curvature_rate(state, contour_velocity(state, params));
}

IntegratingFactorResidual integrating_factor_check(const Trajectory& trajectory, std::size_t node_index,
                                                   const GsqgParams& params) {
  const auto& snaps = trajectory.snapshots;
  require(snaps.size() >= 3, ErrorKind::invalid_parameter, "need at least three snapshots");
  const std::size_t n = snaps.size();
  std::vector<double> t(n), w(n), q(n), kappa(n);
  for (std::size_t j = 0; j < n; ++j) {
    const ContourState& st = snaps[j];
    require(node_index < st.size(), ErrorKind::node_not_found, "node index out of range");
    require(j == 0 || st.contour.labels == snaps[0].contour.labels, ErrorKind::node_not_found,
            "snapshots do not share the node labels");
    const VelocityField field = contour_velocity(st, params);
    const auto dv = arc_derivative(st, field.v);
    const auto d2v = arc_second_derivative(st, field.v);
    t[j] = st.time;
    w[j] = dot(dv[node_index], st.tangent[node_index]);
    q[j] = dot(d2v[node_index], st.normal[node_index]);
    kappa[j] = st.curvature[node_index];
  }
  std::vector<double> E(n, 1.0);
  for (std::size_t j = 1; j < n; ++j) E[j] = E[j - 1] * std::exp((t[j] - t[j - 1]) * (w[j - 1] + w[j]));

  IntegratingFactorResidual out;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const double dQ = (E[j + 1] * kappa[j + 1] - E[j] * kappa[j]) / (t[j + 1] - t[j]);
    const double rhs = E[j] * q[j];
    out.max_residual = std::max(out.max_residual, std::abs(dQ + rhs));
    out.max_term = std::max({out.max_term, std::abs(dQ), std::abs(rhs)});
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::downward: return "downward";
    case Verdict::upward: return "upward";
    case Verdict::indeterminate: break;
  }
  return "indeterminate";
}

BendingResult classify_bending(const ContourState& state, const CornerSpec& spec, const GsqgParams& params,
                               const Annulus& annulus, const ClassifyOptions& options) {
  params.validate();
  spec.validate();
  require(options.window_margin >= 1.0, ErrorKind::invalid_parameter, "window_margin must be at least 1");
  const double lo = std::max(annulus.inner_radius * options.window_margin, 2.0 * spec.delta);
  const double hi = std::min(annulus.outer_radius / options.window_margin, 0.5 * spec.M);
  require(lo < hi, ErrorKind::degenerate_annulus, "the classification window is empty");

  BendingResult out;
  const double F = eval_F(params.alpha, spec.beta).f_value;
  out.threshold = std::max(options.floor_per_delta / spec.delta,
                           options.fraction * params.c_alpha * std::abs(F) * state.time /
                               std::pow(hi, 1.0 + params.alpha));

  const double on_edge = 1e-12 * spec.M;
  const auto& anc = state.contour.ancestors;
  auto collect = [&](Edge edge) {
    BendingVerdict v;
    v.edge = edge;
    v.annulus = annulus;
    v.min_kappa = std::numeric_limits<double>::infinity();
    v.max_kappa = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < state.size(); ++i) {
      const Vec2 p = anc[i];
      const bool on = edge == Edge::lower ? std::abs(p.y) <= on_edge && p.x > 0.0
                                          : std::abs(p.x - spec.beta * p.y) <= on_edge * (1.0 + spec.beta) &&
                                                p.y > 0.0;
      const double r = norm(state.contour.nodes[i]);
      if (!on || r < lo || r > hi) continue;
      ++v.nodes;
      v.min_kappa = std::min(v.min_kappa, state.curvature[i]);
      v.max_kappa = std::max(v.max_kappa, state.curvature[i]);
    }
    if (v.nodes == 0) return v;
    const bool positive = v.min_kappa > out.threshold;
    const bool negative = v.max_kappa < -out.threshold;
    // Positive curvature on the lower edge and negative on the upper edge both bend the boundary downward.
    if (edge == Edge::lower) {
      v.verdict = positive ? Verdict::downward : negative ? Verdict::upward : Verdict::indeterminate;
    } else {
      v.verdict = negative ? Verdict::downward : positive ? Verdict::upward : Verdict::indeterminate;
    }
    return v;
  };
  out.lower = collect(Edge::lower);
  out.upper = collect(Edge::upper);
  const bool lower_seen = out.lower.nodes > 0;
  const bool upper_seen = out.upper.nodes > 0;
  if (lower_seen && upper_seen) {
    out.verdict = out.lower.verdict == out.upper.verdict ? out.lower.verdict : Verdict::indeterminate;
  } else if (lower_seen || upper_seen) {
    out.verdict = lower_seen ? out.lower.verdict : out.upper.verdict;
  }
  return out;
}

ConvexityReport convexity_breaking_run(const Contour& initial, const GsqgParams& params, const SimConfig& config,
                                       double rate_scale) {
  require(rate_scale >= 0.0, ErrorKind::invalid_parameter, "rate_scale must be non-negative");
  ConvexityReport rep;
  const ContourState st0 = frame(initial, 0.0);
  rep.nodes = initial.size();
  rep.initial_min_kappa = *std::min_element(st0.curvature.begin(), st0.curvature.end());
  require(rep.initial_min_kappa >= 0.0, ErrorKind::invalid_contour, "the initial contour is not convex");

  const Trajectory traj = simulate(initial, params, config);
  for (const ContourState& st : traj.snapshots) {
    if (st.time == 0.0) continue;
    const double thr = rate_scale * std::abs(st.time);
    const auto it = std::min_element(st.curvature.begin(), st.curvature.end());
    rep.threshold = thr;
    if (*it < -thr) {
      rep.broken = true;
      rep.breaking_time = st.time;
      rep.breaking_location = st.contour.nodes[static_cast<std::size_t>(it - st.curvature.begin())];
      rep.min_kappa_at_break = *it;
      rep.kappa_node0_at_break = st.curvature[0];
      break;
    }
  }
  return rep;
}

ConvexityReport convexity_breaking_run(const CornerSpec& spec, const GsqgParams& params, double epsilon,
                                       const SimConfig& config, const ConvexityOptions& options) {
  params.validate();
  spec.validate();
  const Annulus ann = annulus(params.alpha, spec.beta, spec.delta, spec.M);
  double a = options.tangency_a;
  if (a <= 0.0) a = std::clamp(ann.mid_radius(), 2.0 * spec.delta, 0.5 * spec.M);
  require(ann.contains(a), ErrorKind::probe_out_of_range, "the tangency point lies outside the annulus");

  const CornerShape base = corner_shape(spec);
  const ConvexifiedShape shape = convexified_shape(base, epsilon, a, options.edge);
  const double npu = options.nodes_per_unit > 0.0 ? options.nodes_per_unit : 16.0 / spec.delta;
  const Contour initial = sample_convexified(shape, spec, npu, options.sampling);

  const double F = eval_F(params.alpha, spec.beta).f_value;
  const double rate = options.fraction * params.c_alpha * std::abs(F) / std::pow(a, 1.0 + params.alpha);
  ConvexityReport rep = convexity_breaking_run(initial, params, config, rate);
  rep.symmetric_difference = shape.symmetric_difference;
  return rep;
}

}  // namespace gsqg
