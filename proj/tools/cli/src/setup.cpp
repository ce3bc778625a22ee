#include "gsqg_cli/setup.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "gsqg/error.hpp"

namespace gsqg::cli {

namespace {

const std::set<std::string> kKnownKeys = {
    "shape",       "alpha",        "c_alpha",     "beta",          "delta",
    "M",           "target_area",  "nodes_per_unit", "growth",     "max_spacing_fraction",
    "radius",      "semi_major",   "semi_minor",  "nodes",         "dt",
    "dt_fraction", "steps",        "horizon",     "resample_every", "target_spacing",
    "graded_resampling", "snapshot_times", "snapshot_every", "cfl_factor", "seed",
    "epsilon",     "tangency_a",   "edge",        "fraction",      "rate_scale",
};

ShapeKind parse_shape(const KeyValueConfig& cfg) {
  const std::string s = cfg.get_string("shape", "corner");
  if (s == "corner") return ShapeKind::corner;
  if (s == "circle") return ShapeKind::circle;
  if (s == "ellipse") return ShapeKind::ellipse;
  throw Error(ErrorKind::parse_error, cfg.source() + ": shape must be corner, circle or ellipse, got '" + s + "'");
}

}  // namespace

std::string to_string(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::corner: return "corner";
    case ShapeKind::circle: return "circle";
    case ShapeKind::ellipse: break;
  }
  return "ellipse";
}

RunSetup read_setup(const KeyValueConfig& cfg) {
  cfg.require_known(kKnownKeys);
  RunSetup s;
  s.shape = parse_shape(cfg);
  s.params.alpha = cfg.get_double("alpha", 0.0);
  s.params.c_alpha = cfg.get_double("c_alpha", 1.0);
  s.params.validate();

  s.spec.beta = cfg.get_double("beta", 0.0);
  s.spec.delta = cfg.get_double("delta", 0.01);
  s.spec.M = cfg.get_double("M", 1.0);
  s.spec.target_area = cfg.get_double("target_area", 0.0);
  s.nodes_per_unit = cfg.get_double("nodes_per_unit", 0.0);
  s.sampling.growth = cfg.get_double("growth", s.sampling.growth);
  s.sampling.max_spacing_fraction = cfg.get_double("max_spacing_fraction", s.sampling.max_spacing_fraction);
  if (s.shape == ShapeKind::corner) {
    s.spec.validate();
    if (s.nodes_per_unit <= 0.0) s.nodes_per_unit = 16.0 / s.spec.delta;
  }

  s.radius = cfg.get_double("radius", 1.0);
  s.semi_major = cfg.get_double("semi_major", 1.0);
  s.semi_minor = cfg.get_double("semi_minor", 0.5);
  s.nodes = cfg.get_int("nodes", 256);
  require(s.radius > 0.0 && s.semi_major > 0.0 && s.semi_minor > 0.0, ErrorKind::invalid_parameter,
          "radius and semi-axes must be positive");
  require(s.nodes >= 16, ErrorKind::invalid_parameter, "nodes must be at least 16");

  s.sim.dt = cfg.get_double("dt", 0.0);
  s.dt_fraction = cfg.get_double("dt_fraction", 0.5);
  s.sim.n_steps = cfg.get_int("steps", 1);
  s.horizon = cfg.get_double("horizon", 0.0);
  s.sim.resample_every = cfg.get_int("resample_every", 0);
  s.sim.target_spacing = cfg.get_double("target_spacing", 0.0);
  s.sim.snapshot_times = cfg.get_list("snapshot_times", {});
  s.sim.snapshot_every = cfg.get_int("snapshot_every", 0);
  s.sim.cfl_factor = cfg.get_double("cfl_factor", 0.25);
  s.seed = cfg.get_int("seed", 0);
  require(s.dt_fraction > 0.0 && s.dt_fraction <= 1.0, ErrorKind::invalid_parameter, "dt_fraction must lie in (0, 1]");
  require(s.horizon >= 0.0, ErrorKind::invalid_parameter, "horizon must be non-negative");
  const std::string graded = cfg.get_string("graded_resampling", s.shape == ShapeKind::corner ? "true" : "false");
  if (graded != "true" && graded != "false") {
    throw Error(ErrorKind::parse_error, cfg.source() + ": graded_resampling must be true or false");
  }
  if (graded == "true" && s.shape == ShapeKind::corner) {
    s.sim.grading = SpacingField{1.0 / s.nodes_per_unit, s.sampling.growth,
                                 s.sampling.max_spacing_fraction * s.spec.M};
  }

  s.epsilon = cfg.get_double("epsilon", 0.05);
  s.tangency_a = cfg.get_double("tangency_a", 0.0);
  const std::string edge = cfg.get_string("edge", "lower");
  if (edge != "lower" && edge != "upper") {
    throw Error(ErrorKind::parse_error, cfg.source() + ": edge must be lower or upper");
  }
  s.edge = edge == "lower" ? Edge::lower : Edge::upper;
  s.fraction = cfg.get_double("fraction", 0.1);
  s.rate_scale = cfg.get_double("rate_scale", 1.0);
  return s;
}

Contour initial_contour(const RunSetup& s) {
  if (s.shape == ShapeKind::corner) return build_corner_patch(s.spec, s.nodes_per_unit, s.sampling);
  std::vector<Vec2> nodes(static_cast<std::size_t>(s.nodes));
  for (int i = 0; i < s.nodes; ++i) {
    const double t = -std::numbers::pi + 2.0 * std::numbers::pi * i / s.nodes;
    nodes[static_cast<std::size_t>(i)] = s.shape == ShapeKind::circle
                                             ? Vec2{s.radius * std::cos(t), s.radius * std::sin(t)}
                                             : Vec2{s.semi_major * std::cos(t), s.semi_minor * std::sin(t)};
  }
  Contour c = Contour::from_nodes(std::move(nodes));
  if (s.shape == ShapeKind::ellipse) c = resample(c, perimeter(c.nodes) / s.nodes);
  c.validate();
  return c;
}

void resolve_time_stepping(RunSetup& s, const Contour& initial) {
  if (s.sim.dt <= 0.0) {
    const ContourState st = frame(initial);
    s.sim.dt = s.dt_fraction * dt_limit(st, s.params, s.sim.cfl_factor);
  }
  if (s.horizon > 0.0) {
    s.sim.n_steps = static_cast<int>(std::ceil(s.horizon / s.sim.dt - 1e-9));
    s.sim.dt = s.horizon / s.sim.n_steps;
  }
  if (s.sim.snapshot_times.empty() && s.sim.snapshot_every <= 0) s.sim.snapshot_every = std::max(1, s.sim.n_steps);
  s.sim.validate();
}

}  // namespace gsqg::cli
