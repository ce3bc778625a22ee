#include "gsqg_cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "gsqg/dynamics.hpp"
#include "gsqg/oracle.hpp"
#include "gsqg_cli/config.hpp"
#include "gsqg_cli/io.hpp"
#include "gsqg_cli/parallel.hpp"
#include "gsqg_cli/setup.hpp"
#include "gsqg_cli/svg.hpp"

namespace gsqg::cli {

namespace {

std::string label_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

RunSetup load_setup(const RunOptions& options) {
  require(!options.config.empty(), ErrorKind::invalid_parameter, "--config is required");
  KeyValueConfig cfg = KeyValueConfig::from_file(options.config);
  for (const auto& [key, value] : options.overrides) {
    cfg.set(key, value);
    if (key == "steps") cfg.set("horizon", "0");
  }
  return read_setup(cfg);
}

double view_half_width(const RunSetup& s) {
  switch (s.shape) {
    case ShapeKind::corner: return 1.2 * s.spec.M;
    case ShapeKind::circle: return 1.2 * s.radius;
    case ShapeKind::ellipse: break;
  }
  return 1.2 * std::max(s.semi_major, s.semi_minor);
}

void write_frames(const std::string& dir, const RunSetup& setup, const Trajectory& trajectory) {
  const auto& snaps = trajectory.snapshots;
  if (snaps.empty()) return;
  const double half = view_half_width(setup);
  const ContourStroke ghost{snaps.front().contour.nodes, "#888888", 0.35, 1.0};
  std::vector<ContourStroke> all = {ghost};
  for (std::size_t k = 0; k < snaps.size(); ++k) {
    const double u = snaps.size() > 1 ? static_cast<double>(k) / static_cast<double>(snaps.size() - 1) : 0.0;
    const ContourStroke stroke{snaps[k].contour.nodes, ramp_color(u), 1.0, 1.2};
    all.push_back(stroke);
    char name[32];
    std::snprintf(name, sizeof name, "frame_%03zu.svg", k);
    write_text_file(join_path(dir, name), contour_svg({ghost, stroke}, half, "t = " + label_number(snaps[k].time)));
  }
  write_text_file(join_path(dir, "frames.svg"), contour_svg(all, half, "all snapshots"));
}

void print_snapshot_table(const Trajectory& trajectory, std::ostream& log) {
  for (const ContourState& s : trajectory.snapshots) {
    const auto [lo, hi] = std::minmax_element(s.curvature.begin(), s.curvature.end());
    char line[160];
    std::snprintf(line, sizeof line, "t = %-10.6g N = %-5zu area = %.10g  min k = %.4e  max k = %.4e\n", s.time,
                  s.size(), signed_area(s.contour.nodes), *lo, *hi);
    log << line;
  }
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_parameter:
    case ErrorKind::parse_error:
    case ErrorKind::io_error:
    case ErrorKind::probe_out_of_range:
      return kExitUsage;
    case ErrorKind::no_breaking_observed:
      return kExitNoBreaking;
    default:
      return kExitNumerical;
  }
}

int cmd_f_table(const FTableOptions& o, std::ostream& log) {
  require(!o.alphas.empty(), ErrorKind::invalid_parameter, "f-table needs at least one alpha");
  require(o.beta_step > 0.0 && o.beta_hi >= o.beta_lo && o.beta_lo >= 0.0, ErrorKind::invalid_parameter,
          "beta range must satisfy 0 <= lo <= hi and step > 0");
  for (double a : o.alphas) GsqgParams{a, 1.0}.validate();
  const auto n = static_cast<std::size_t>(std::floor((o.beta_hi - o.beta_lo) / o.beta_step + 1e-9)) + 1;
  std::ostringstream csv;
  csv << "alpha,beta,integral_I,f_value\n";
  std::vector<Series> series;
  for (double alpha : o.alphas) {
    Series s{"alpha = " + label_number(alpha), {}, {}};
    for (std::size_t i = 0; i < n; ++i) {
      const double beta = o.beta_lo + static_cast<double>(i) * o.beta_step;
      const FRecord r = eval_F(alpha, beta, o.tol);
      csv << format_number(r.alpha) << ',' << format_number(r.beta) << ',' << format_number(r.integral_I) << ','
          << format_number(r.f_value) << '\n';
      s.x.push_back(beta);
      s.y.push_back(r.f_value);
    }
    series.push_back(std::move(s));
  }
  ensure_directory(o.out);
  write_text_file(join_path(o.out, "f_table.csv"), csv.str());
  write_text_file(join_path(o.out, "f_table.svg"), line_plot_svg(series, "beta", "F(alpha, beta)"));
  log << "wrote " << series.size() << " curves x " << n << " points to " << join_path(o.out, "f_table.csv") << '\n';
  return kExitOk;
}

int cmd_beta_star(const BetaStarOptions& o, std::ostream& log) {
  require(!o.alphas.empty(), ErrorKind::invalid_parameter, "beta-star needs at least one alpha");
  std::ostringstream csv;
  csv << "alpha,beta_star,f_minus,f_plus,sign_change\n";
  for (double alpha : o.alphas) {
    const double bs = beta_star(alpha, o.tol);
    const double lo = eval_F(alpha, std::max(0.0, bs - 0.01)).f_value;
    const double hi = eval_F(alpha, bs + 0.01).f_value;
    const bool change = (lo < 0.0) != (hi < 0.0);
    csv << format_number(alpha) << ',' << format_number(bs) << ',' << format_number(lo) << ',' << format_number(hi)
        << ',' << (change ? "true" : "false") << '\n';
    log << "alpha = " << label_number(alpha) << "  beta* = " << format_number(bs) << '\n';
  }
  ensure_directory(o.out);
  write_text_file(join_path(o.out, "beta_star.csv"), csv.str());
  return kExitOk;
}

int cmd_verify(const VerifyCommandOptions& o, std::ostream& log) {
  const VerifyReport report = run_verify(o.verify);
  log << report.to_text();
  if (!o.out.empty()) {
    ensure_directory(o.out);
    write_text_file(join_path(o.out, "verify.json"), report.to_json().dump(2) + "\n");
  }
  return report.passed() ? kExitOk : kExitCheckFailure;
}

int cmd_oracle(const OracleOptions& o, std::ostream& log) {
  require(!o.alphas.empty() && !o.betas.empty() && !o.probes.empty(), ErrorKind::invalid_parameter,
          "oracle needs at least one alpha, beta and a");
  struct Probe {
    double alpha, beta, a;
  };
  std::vector<Probe> probes;
  for (double alpha : o.alphas)
    for (double beta : o.betas)
      for (double a : o.probes) probes.push_back({alpha, beta, a});
  for (const Probe& p : probes) {
    const CornerSpec spec{p.beta, o.delta, o.M};
    spec.validate();
    GsqgParams{p.alpha, 1.0}.validate();
    check_probe(spec, p.a);
  }
  std::vector<std::string> rows(probes.size());
  parallel_for(probes.size(), o.jobs, [&](std::size_t i) {
    const Probe& p = probes[i];
    rows[i] = oracle_d2_v2({p.beta, o.delta, o.M}, {p.alpha, 1.0}, p.a).csv_row();
  });
  std::ostringstream csv;
  csv << WedgeOracleReport::csv_header() << '\n';
  for (const std::string& r : rows) csv << r << '\n';
  if (o.out.empty()) {
    log << csv.str();
  } else {
    write_text_file(o.out, csv.str());
    log << "wrote " << rows.size() << " probes to " << o.out << '\n';
  }
  return kExitOk;
}

int cmd_simulate(const RunOptions& o, std::ostream& log) {
  RunSetup setup = load_setup(o);
  const Contour initial = initial_contour(setup);
  resolve_time_stepping(setup, initial);
  log << "simulate: " << to_string(setup.shape) << ", alpha = " << label_number(setup.params.alpha)
      << ", N = " << initial.size() << ", dt = " << label_number(setup.sim.dt) << ", steps = " << setup.sim.n_steps
      << '\n';
  Trajectory trajectory;
  std::string status = "complete";
  int code = kExitOk;
  try {
    trajectory = simulate(initial, setup.params, setup.sim);
  } catch (const SimulationError& e) {
    trajectory = e.partial();
    status = std::string("aborted: ") + e.what();
    code = exit_code_for(e.kind());
    log << "simulation aborted: " << e.what() << '\n';
  }
  write_trajectory(o.out, setup, trajectory, status);
  write_frames(o.out, setup, trajectory);
  print_snapshot_table(trajectory, log);
  log << "wrote " << trajectory.snapshots.size() << " snapshots to " << o.out << '\n';
  return code;
}

int cmd_convexity(const RunOptions& o, std::ostream& log) {
  RunSetup setup = load_setup(o);
  ConvexityReport report;
  std::size_t nodes = 0;
  if (setup.shape == ShapeKind::corner) {
    ConvexityOptions copt;
    copt.tangency_a = setup.tangency_a;
    copt.edge = setup.edge;
    copt.nodes_per_unit = setup.nodes_per_unit;
    copt.sampling = setup.sampling;
    copt.fraction = setup.fraction;
    if (copt.tangency_a <= 0.0) {
      const Annulus ann = annulus(setup.params.alpha, setup.spec.beta, setup.spec.delta, setup.spec.M);
      copt.tangency_a = ann.mid_radius();
    }
    const Contour patch = build_convexified_patch(setup.spec, setup.epsilon, copt.tangency_a, copt.edge,
                                                  copt.nodes_per_unit, copt.sampling);
    nodes = patch.size();
    resolve_time_stepping(setup, patch);
    report = convexity_breaking_run(setup.spec, setup.params, setup.epsilon, setup.sim, copt);
  } else {
    const Contour initial = initial_contour(setup);
    nodes = initial.size();
    resolve_time_stepping(setup, initial);
    report = convexity_breaking_run(initial, setup.params, setup.sim, setup.rate_scale);
  }
  nlohmann::json j = to_json(setup);
  j["epsilon"] = setup.epsilon;
  j["report"] = {{"initial_min_kappa", report.initial_min_kappa},
                 {"broken", report.broken},
                 {"breaking_time", report.breaking_time},
                 {"breaking_location", {report.breaking_location.x, report.breaking_location.y}},
                 {"min_kappa_at_break", report.min_kappa_at_break},
                 {"kappa_node0_at_break", report.kappa_node0_at_break},
                 {"threshold", report.threshold},
                 {"nodes", report.nodes},
                 {"symmetric_difference", report.symmetric_difference}};
  ensure_directory(o.out);
  write_text_file(join_path(o.out, "convexity.json"), j.dump(2) + "\n");
  log << "convexity: " << to_string(setup.shape) << ", alpha = " << label_number(setup.params.alpha)
      << ", N = " << nodes << ", dt = " << label_number(setup.sim.dt) << ", steps = " << setup.sim.n_steps << '\n'
      << "initial min k = " << format_number(report.initial_min_kappa) << '\n';
  if (!report.broken) {
    log << "no breaking observed up to t = " << label_number(setup.sim.dt * setup.sim.n_steps) << '\n';
    return kExitNoBreaking;
  }
  log << "convexity broken at t = " << format_number(report.breaking_time) << ", location ("
      << format_number(report.breaking_location.x) << ", " << format_number(report.breaking_location.y)
      << "), min k = " << format_number(report.min_kappa_at_break)
      << ", node 0 k = " << format_number(report.kappa_node0_at_break)
      << ", threshold = " << format_number(report.threshold) << '\n';
  return kExitOk;
}

std::string config_keys_help() {
  return R"(Config file keys (key = value, '#' comments, [section] prefixes keys):
  shape = corner              corner | circle | ellipse
  alpha = 0, c_alpha = 1      model parameters, 0 <= alpha < 2
  beta = 0, delta = 0.01, M = 1, target_area = 2 M^2
                              corner geometry
  nodes_per_unit = 16/delta   finest node density at the corner
  growth = 0.02, max_spacing_fraction = 0.04
                              graded spacing away from the corner
  radius = 1, semi_major = 1, semi_minor = 0.5, nodes = 256
                              circle and ellipse
  dt = 0.5 * CFL limit        dt_fraction = 0.5 scales the limit when dt is unset
  steps = 1, horizon = 0      a positive horizon sets steps = ceil(horizon / dt)
  resample_every = 0, target_spacing = 0, graded_resampling = true (corner)
  snapshot_times = [], snapshot_every = 0 (final state only when both unset)
  cfl_factor = 0.25, seed = 0
  epsilon = 0.05, tangency_a = mid-annulus, edge = lower, fraction = 0.1
                              convexity runs on corner shapes
  rate_scale = 1              convexity threshold rate for circle and ellipse
)";
}

}  // namespace gsqg::cli
