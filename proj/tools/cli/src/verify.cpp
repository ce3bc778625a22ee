#include "gsqg_cli/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <algorithm>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "gsqg/analytic.hpp"
#include "gsqg/dynamics.hpp"
#include "gsqg/error.hpp"
#include "gsqg/oracle.hpp"
#include "gsqg_cli/parallel.hpp"

namespace gsqg::cli {

namespace {

struct Context {
  VerifyOptions options;
  double F(double alpha, double beta) const {
    const double f = eval_F(alpha, beta).f_value;
    return options.flip_f_sign ? -f : f;
  }
  bool full() const { return options.level == VerifyLevel::full; }
};

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

struct LogFit {
  double slope = 0.0;
  double constant = 0.0;
};

/// Least squares fit of log y = log C + p log x.
LogFit log_fit(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double p = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return {p, std::exp((sy - p * sx) / n)};
}

int sign(double v) { return (v > 0) - (v < 0); }

CheckResult closed_forms(const Context& ctx) {
  CheckResult r{"closed-forms", true, "", nlohmann::json::object(), 0.0};
  double worst = 0.0;
  const double e01 = std::abs(ctx.F(0.0, 1.0) - 0.5);
  const double e10 = std::abs(ctx.F(1.0, 0.0) + 1.0);
  r.passed = e01 <= 1e-10 && e10 <= 1e-10;
  for (double beta : {0.0, 0.5, 1.0, 2.0, 4.0}) {
    const double e = std::abs(ctx.F(1.0, beta) + 1.0 / std::sqrt(1.0 + beta * beta));
    worst = std::max(worst, e);
  }
  r.passed = r.passed && worst <= 1e-8;
  r.details = {{"F(0,1) error", e01}, {"F(1,0) error", e10}, {"F(1,beta) max error", worst}};
  r.summary = fmt("F(0,1) err %.1e, F(1,0) err %.1e", e01, e10) + fmt(", F(1,beta) max err %.1e", worst);
  return r;
}

CheckResult monotonicity(const Context& ctx) {
  CheckResult r{"monotonicity", true, "", nlohmann::json::array(), 0.0};
  std::vector<std::pair<double, double>> grid = {{0.0, 0.5}, {0.3, 1.0}, {0.5, 2.0},
                                                 {1.0, 1.0}, {1.5, 0.7}, {1.9, 3.0}};
  std::mt19937 rng(ctx.options.seed);
  std::uniform_real_distribution<double> ua(0.0, 1.95), ub(0.1, 4.0);
  while (grid.size() < 12) {
    const double a = ua(rng);
    grid.emplace_back(a, ub(rng));
  }
  const double h = 1e-4;
  double worst = 0.0;
  for (auto [alpha, beta] : grid) {
    auto G = [&](double b) { return std::pow(b * b + 1.0, 1.0 - alpha / 2.0) * ctx.F(alpha, b); };
    const double fd = (G(beta + h) - G(beta - h)) / (2.0 * h);
    const double e = std::abs(fd - scaled_F_derivative(alpha, beta));
    worst = std::max(worst, e);
    r.details.push_back({{"alpha", alpha}, {"beta", beta}, {"error", e}});
  }
  r.passed = worst <= 1e-6;
  r.summary = fmt("12-point grid, max |FD - closed form| = %.2e", worst);
  return r;
}

CheckResult beta_star_check(const Context& ctx) {
  CheckResult r{"beta-star", true, "", nlohmann::json::array(), 0.0};
  std::ostringstream msg;
  for (int k = 1; k <= 9; ++k) {
    const double alpha = 0.1 * k;
    double bs = 0.0;
    bool ok = true;
    try {
      bs = beta_star(alpha);
    } catch (const Error&) {
      ok = false;
    }
    const double lo = ctx.F(alpha, bs - 0.01), hi = ctx.F(alpha, bs + 0.01);
    ok = ok && bs > 0.0 && sign(lo) * sign(hi) < 0 && std::abs(ctx.F(alpha, bs)) < 1e-8;
    r.passed = r.passed && ok;
    r.details.push_back({{"alpha", alpha}, {"beta_star", bs}, {"F_minus", lo}, {"F_plus", hi}, {"ok", ok}});
  }
  for (double alpha : {1.0, 1.5}) {
    bool change = false;
    double prev = ctx.F(alpha, 0.0);
    for (int i = 1; i <= 400; ++i) {
      const double cur = ctx.F(alpha, 0.025 * i);
      change = change || sign(cur) != sign(prev);
      prev = cur;
    }
    bool threw = false;
    try {
      beta_star(alpha);
    } catch (const Error& e) {
      threw = e.kind() == ErrorKind::no_root;
    }
    r.passed = r.passed && !change && threw;
    r.details.push_back({{"alpha", alpha}, {"sign_change", change}, {"no_root", threw}});
  }
  r.summary = r.passed ? "unique zero for alpha in 0.1..0.9, none for alpha in {1, 1.5}" : "beta* bracket failed";
  return r;
}

CheckResult oracle_decomposition(const Context& ctx) {
  CheckResult r{"oracle-decomposition", true, "", nlohmann::json::array(), 0.0};
  struct Probe {
    double alpha, beta, a;
  };
  std::vector<Probe> probes;
  for (double alpha : {0.0, 0.5, 1.5})
    for (double beta : {0.5, 1.0, 2.7})
      for (double a : {0.05, 0.2}) probes.push_back({alpha, beta, a});
  std::vector<nlohmann::json> rows(probes.size());
  std::vector<double> err_a3(probes.size()), err_route(probes.size());
  parallel_for(probes.size(), ctx.options.jobs, [&](std::size_t i) {
    const Probe& p = probes[i];
    const CornerSpec spec{p.beta, 0.01, 1.0};
    const GsqgParams params{p.alpha, 1.0};
    const CornerShape shape = corner_shape(spec);
    const WedgeOracleReport w = wedge_oracle(shape, params, p.a);
    const double expect = ctx.F(p.alpha, p.beta) / std::pow(p.a, 1.0 + p.alpha);
    err_a3[i] = std::abs(w.parts.A3 - expect) / std::abs(expect);
    const double polar = polar_velocity_v2(shape, params, p.a);
    err_route[i] = std::abs(w.v2 - polar) / std::max(std::abs(polar), 1e-300);
    rows[i] = {{"alpha", p.alpha}, {"beta", p.beta}, {"a", p.a}, {"A3_rel_error", err_a3[i]},
               {"area_vs_polar_rel", err_route[i]}};
  });
  double worst_a3 = 0.0, worst_route = 0.0;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    worst_a3 = std::max(worst_a3, err_a3[i]);
    worst_route = std::max(worst_route, err_route[i]);
    r.details.push_back(rows[i]);
  }
  r.passed = worst_a3 <= 1e-6 && worst_route <= 1e-6;
  r.summary = fmt("A3 vs F/a^(1+alpha) max rel %.1e, area vs polar v2 max rel %.1e", worst_a3, worst_route);
  return r;
}

CheckResult sign_theorem(const Context& ctx) {
  CheckResult r{"sign-theorem", true, "", nlohmann::json::array(), 0.0};
  struct Probe {
    double alpha, beta;
  };
  std::vector<Probe> probes;
  for (double alpha : {0.0, 0.3, 0.5, 1.0, 1.5})
    for (double beta : {0.0, 0.5, 1.0, 2.7, 4.0}) probes.push_back({alpha, beta});
  std::vector<nlohmann::json> rows(probes.size());
  std::vector<int> ok(probes.size(), 1);
  parallel_for(probes.size(), ctx.options.jobs, [&](std::size_t i) {
    const Probe& p = probes[i];
    const double f = ctx.F(p.alpha, p.beta);
    if (std::abs(f) <= 0.05) {
      rows[i] = {{"alpha", p.alpha}, {"beta", p.beta}, {"F", f}, {"skipped", true}};
      return;
    }
    const GsqgParams params{p.alpha, 1.0};
    const double d2 = oracle_d2_v2({p.beta, 1e-3, 10.0}, params, 0.1).d2_v2;
    // F(0, beta) > 0 for beta > 0 and F(alpha, .) < 0 for alpha >= 1.
    bool regime = true;
    if (p.alpha == 0.0 && p.beta > 0.0) regime = f > 0.0;
    if (p.alpha >= 1.0) regime = f < 0.0;
    ok[i] = sign(d2) == sign(f) && regime;
    rows[i] = {{"alpha", p.alpha}, {"beta", p.beta}, {"F", f}, {"oracle_d2_v2", d2}, {"ok", ok[i] != 0}};
  });
  int tested = 0, bad = 0;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    r.details.push_back(rows[i]);
    if (!rows[i].contains("skipped")) ++tested;
    if (!ok[i]) ++bad;
  }
  r.passed = bad == 0;
  r.summary = fmt("sign(F) vs sign(oracle d2 v2): %.0f of %.0f probes disagree", bad, tested);
  return r;
}

CheckResult decay_fits(const Context& ctx) {
  CheckResult r{"decay-fit", true, "", nlohmann::json::array(), 0.0};
  const std::vector<double> Ms = ctx.full() ? std::vector<double>{1, 2, 4, 8} : std::vector<double>{1, 2, 4};
  const std::vector<double> deltas =
      ctx.full() ? std::vector<double>{1e-2, 5e-3, 2.5e-3, 1.25e-3} : std::vector<double>{1e-2, 5e-3, 2.5e-3};
  const double a = 0.1, beta = 1.0;
  const std::vector<double> alphas = {0.0, 0.5, 1.0, 1.5};
  std::vector<nlohmann::json> rows(alphas.size());
  std::vector<int> ok(alphas.size(), 0);
  parallel_for(alphas.size(), ctx.options.jobs, [&](std::size_t i) {
    const GsqgParams params{alphas[i], 1.0};
    const double lead = params.c_alpha * ctx.F(alphas[i], beta) / std::pow(a, 1.0 + alphas[i]);
    std::vector<double> resM, resD;
    for (double M : Ms) resM.push_back(std::abs(oracle_d2_v2({beta, 1e-4, M}, params, a).d2_v2 - lead));
    for (double d : deltas) resD.push_back(std::abs(oracle_d2_v2({beta, d, 1e4}, params, a).d2_v2 - lead));
    const LogFit fm = log_fit(Ms, resM), fd = log_fit(deltas, resD);
    const double pm = -fm.slope, pd = fd.slope;
    ok[i] = std::abs(pm - (1.0 + alphas[i])) <= 0.3 && std::abs(pd - 2.0) <= 0.3;
    rows[i] = {{"alpha", alphas[i]}, {"M_exponent", pm}, {"delta_exponent", pd}, {"ok", ok[i] != 0}};
    if (ctx.full()) {
      rows[i]["C_M"] = fm.constant;
      rows[i]["C_delta"] = fd.constant;
    }
  });
  std::ostringstream s;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    r.passed = r.passed && ok[i];
    r.details.push_back(rows[i]);
    s << (i ? "; " : "") << fmt("alpha %.1f: ", alphas[i]) << fmt("M exponent %.2f, delta exponent %.2f", rows[i]["M_exponent"],
                                                                   rows[i]["delta_exponent"]);
    if (ctx.full()) s << fmt(" (C_M %.3g, C_delta %.3g)", rows[i]["C_M"], rows[i]["C_delta"]);
  }
  r.summary = s.str();
  return r;
}

CheckResult steady_corner(const Context&) {
  CheckResult r{"steady-corner", true, "", nlohmann::json::array(), 0.0};
  const double bs = beta_star(0.5);
  const GsqgParams params{0.5, 1.0};
  std::vector<double> d1;
  for (int k = 0; k < 8; ++k) {
    const double M = 2.0 * std::pow(2.0, k), delta = 1e-2 * std::pow(2.0, -k);
    d1.push_back(std::abs(oracle_d1_v({bs, delta, M}, params, 1.0)));
    r.details.push_back({{"M", M}, {"delta", delta}, {"abs_d1_v", d1.back()}});
  }
  for (std::size_t k = 1; k < d1.size(); ++k) r.passed = r.passed && d1[k] < d1[k - 1];
  const double ratio = d1.back() / d1.front();
  r.passed = r.passed && ratio < 0.1;
  r.summary = fmt("|d1 v| at beta*(0.5), a = 1: %.3e -> %.3e", d1.front(), d1.back()) + fmt(" (ratio %.3f)", ratio);
  return r;
}

std::size_t pinned_node(const Contour& c, Edge edge, double beta, double a) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Vec2 p = c.nodes[i];
    const bool on_edge = edge == Edge::lower ? std::abs(p.y) < 1e-12 && p.x > 0.0
                                             : std::abs(p.x - beta * p.y) < 1e-12 && p.y > 0.0;
    if (on_edge && std::abs(norm(p) - a) < 1e-9) return i;
  }
  throw Error(ErrorKind::node_not_found, "pinned node missing");
}

CheckResult curvature_rate_check(const Context& ctx) {
  CheckResult r{"curvature-rate", true, "", nlohmann::json::array(), 0.0};
  std::vector<std::pair<double, double>> cases = {{1.0, 0.0}, {0.0, 1.0}};
  if (ctx.full()) cases.insert(cases.end(), {{0.5, 1.0}, {0.3, 2.7}, {0.3, 0.0}, {1.5, 1.0}});
  std::vector<nlohmann::json> rows(cases.size());
  std::vector<int> ok(cases.size(), 0);
  parallel_for(cases.size(), ctx.options.jobs, [&](std::size_t i) {
    const auto [alpha, beta] = cases[i];
    const CornerSpec spec{beta, 0.01, 1.0};
    const GsqgParams params{alpha, 1.0};
    const double a = annulus(alpha, beta, spec.delta, spec.M).mid_radius();
    SamplingOptions so;
    so.lower_pins = {a};
    const Contour c = build_corner_patch(spec, 16.0 / spec.delta, so);
    const ContourState st = frame(c);
    const double rate = curvature_rate(st, params)[pinned_node(c, Edge::lower, beta, a)];
    const double d2 = wedge_oracle(corner_shape(spec), params, a).d2_v2;
    const double rel = std::abs(rate - d2) / std::abs(d2);
    ok[i] = rel < 0.1 && sign(rate) == sign(ctx.F(alpha, beta));
    rows[i] = {{"alpha", alpha}, {"beta", beta}, {"a", a}, {"curvature_rate", rate}, {"oracle_d2_v2", d2},
               {"rel_error", rel}, {"ok", ok[i] != 0}};
  });
  double worst = 0.0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    r.passed = r.passed && ok[i];
    worst = std::max(worst, rows[i]["rel_error"].get<double>());
    r.details.push_back(rows[i]);
  }
  r.summary = fmt("lower-edge curvature rate vs oracle d2 v2 at mid-annulus: max rel %.2e over %.0f cases", worst,
                  static_cast<double>(cases.size()));
  return r;
}

CheckResult circle_steadiness(const Context&) {
  CheckResult r{"circle-steadiness", true, "", nlohmann::json::array(), 0.0};
  std::vector<Vec2> nodes(256);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double t = -std::numbers::pi + 2.0 * std::numbers::pi * static_cast<double>(i) / 256.0;
    nodes[i] = {std::cos(t), std::sin(t)};
  }
  const ContourState st = frame(Contour::from_nodes(nodes));
  double worst = 0.0;
  for (double alpha : {0.0, 0.5, 1.0, 1.5}) {
    const VelocityField f = contour_velocity(st, {alpha, 1.0});
    double vn = 0.0, vmax = 0.0;
    for (std::size_t i = 0; i < f.v.size(); ++i) {
      vn = std::max(vn, std::abs(dot(f.v[i], st.normal[i])));
      vmax = std::max(vmax, norm(f.v[i]));
    }
    worst = std::max(worst, vn / vmax);
    r.details.push_back({{"alpha", alpha}, {"normal_over_max", vn / vmax}});
  }
  r.passed = worst < 1e-3;
  r.summary = fmt("256-node unit circle: max normal/max |v| = %.2e", worst);
  return r;
}

CheckResult epsilon_convergence(const Context&) {
  CheckResult r{"epsilon-convergence", true, "", nlohmann::json::array(), 0.0};
  const CornerSpec spec{0.0, 0.01, 1.0};
  const GsqgParams params{1.0, 1.0};
  const double a = annulus(1.0, 0.0, spec.delta, spec.M).mid_radius();
  SamplingOptions so;
  so.lower_pins = {a};
  const Contour c = build_corner_patch(spec, 16.0 / spec.delta, so);
  const double corner_rate = curvature_rate(frame(c), params)[pinned_node(c, Edge::lower, 0.0, a)];
  const CornerShape base = corner_shape(spec);
  double prev = std::numeric_limits<double>::infinity();
  for (double eps : {0.1, 0.05, 0.025}) {
    const ConvexifiedShape cs = convexified_shape(base, eps, a, Edge::lower);
    const Contour cc = sample_convexified(cs, spec, 16.0 / spec.delta);
    const double rate = curvature_rate(frame(cc), params)[0];
    const double rel = std::abs(rate - corner_rate) / std::abs(corner_rate);
    r.passed = r.passed && rel < prev;
    prev = rel;
    r.details.push_back({{"epsilon", eps}, {"rate", rate}, {"rel_error", rel}});
  }
  r.summary = fmt("convexified rate at the tangency node -> corner rate, final rel %.2e", prev);
  return r;
}

using CheckFn = CheckResult (*)(const Context&);

std::vector<std::pair<std::string, CheckFn>> checks(VerifyLevel level) {
  std::vector<std::pair<std::string, CheckFn>> out = {
      {"closed-forms", closed_forms},   {"monotonicity", monotonicity},
      {"beta-star", beta_star_check},   {"oracle-decomposition", oracle_decomposition},
      {"sign-theorem", sign_theorem},   {"decay-fit", decay_fits},
      {"steady-corner", steady_corner}, {"curvature-rate", curvature_rate_check},
  };
  if (level == VerifyLevel::full) {
    out.emplace_back("circle-steadiness", circle_steadiness);
    out.emplace_back("epsilon-convergence", epsilon_convergence);
  }
  return out;
}

}  // namespace

std::string to_string(VerifyLevel level) { return level == VerifyLevel::quick ? "quick" : "full"; }

bool VerifyReport::passed() const {
  for (const CheckResult& c : checks)
    if (!c.passed) return false;
  return true;
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json j = {{"level", level}, {"passed", passed()}, {"checks", nlohmann::json::array()}};
  for (const CheckResult& c : checks) {
    j["checks"].push_back(
        {{"name", c.name}, {"passed", c.passed}, {"summary", c.summary}, {"seconds", c.seconds}, {"details", c.details}});
  }
  return j;
}

std::string VerifyReport::to_text() const {
  std::ostringstream o;
  int good = 0;
  for (const CheckResult& c : checks) {
    good += c.passed;
    o << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.summary << '\n';
  }
  o << "verify " << level << ": " << good << '/' << checks.size() << " checks passed\n";
  return o.str();
}

std::vector<std::string> verify_check_names(VerifyLevel level) {
  std::vector<std::string> names;
  for (const auto& c : checks(level)) names.push_back(c.first);
  return names;
}

VerifyReport run_verify(const VerifyOptions& options) {
  const Context ctx{options};
  VerifyReport report;
  report.level = to_string(options.level);
  for (const auto& [name, fn] : checks(options.level)) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = fn(ctx);
    } catch (const Error& e) {
      r = {name, false, std::string("error: ") + e.what(), nlohmann::json::object(), 0.0};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report.checks.push_back(std::move(r));
  }
  return report;
}

}  // namespace gsqg::cli
