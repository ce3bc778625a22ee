#include "gsqg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <vector>

#include "gsqg/error.hpp"
#include "gsqg/quadrature.hpp"

namespace gsqg {

namespace {

constexpr double kTol = 1e-12;

/// Inner y1-antiderivative of the kernel (a - y1) / D^(1 + alpha/2) and its
/// a-derivatives, with D = (a - t)^2 + y^2.
struct Kernel {
  double alpha;
  double a;

  double f(double t, double y) const {
    const double D = (a - t) * (a - t) + y * y;
    return alpha == 0.0 ? -0.5 * std::log(D) : std::pow(D, -0.5 * alpha) / alpha;
  }
  double fa(double t, double y) const {
    const double D = (a - t) * (a - t) + y * y;
    return -(a - t) * std::pow(D, -1.0 - 0.5 * alpha);
  }
  double faa(double t, double y) const {
    const double u = a - t;
    const double D = u * u + y * y;
    return ((alpha + 1.0) * u * u - y * y) * std::pow(D, -2.0 - 0.5 * alpha);
  }
  double eval(int order, double t, double y) const {
    return order == 0 ? f(t, y) : order == 1 ? fa(t, y) : faa(t, y);
  }
};

struct Sums {
  double value[3] = {0.0, 0.0, 0.0};
  double error = 0.0;
};

std::vector<double> probe_breaks(double a, double beta, double limit) {
  const double s = a / std::hypot(beta, 1.0);
  std::vector<double> out;
  for (double r : {0.05, 0.2, 0.5, 1.0, 2.0, 5.0, 20.0}) {
    if (r * s < limit) out.push_back(r * s);
  }
  return out;
}

/// Integral over y in [lo, hi] of g(order, y) for orders 0..2.
template <class G>
Sums integrate_orders(const G& g, double lo, double hi, const std::vector<double>& breaks, bool singular_ends) {
  Sums s;
  for (int order = 0; order < 3; ++order) {
    auto fn = [&](double y) { return g(order, y); };
    const quad::Result r = singular_ends ? quad::endpoint_singular_with_breaks(fn, lo, hi, breaks, kTol)
                                         : quad::adaptive_with_breaks(fn, lo, hi, breaks, kTol);
    s.value[order] = r.value;
    s.error += r.error;
  }
  return s;
}

struct Evaluation {
  OracleParts parts;
  double dA = 0.0, dB = 0.0, dC = 0.0, d2B = 0.0, d2C = 0.0;
  double error = 0.0;
};

Evaluation evaluate(const CornerShape& shape, const GsqgParams& params, double a, bool values_only) {
  const CornerSpec& spec = shape.spec;
  const double beta = spec.beta;
  const double M = spec.M;
  const Kernel k{params.alpha, a};
  const double Y = M / std::max(beta, 1.0);
  Evaluation ev;

  // Wedge inside the box.
  {
    auto breaks = probe_breaks(a, beta, Y);
    if (values_only) {
      const quad::Result r = quad::adaptive_with_breaks(
          [&](double y) { return k.f(M, y) - k.f(beta * y, y); }, 0.0, Y, breaks, kTol);
      ev.parts.A = r.value;
      ev.error += r.error;
    } else {
      const Sums s = integrate_orders(
          [&](int o, double y) { return k.eval(o, M, y) - (o == 2 ? 0.0 : k.eval(o, beta * y, y)); }, 0.0, Y,
          breaks, false);
      ev.parts.A = s.value[0];
      ev.dA = s.value[1];
      ev.parts.A1 = s.value[2];
      ev.error += s.error;
      const quad::Result a2 =
          quad::adaptive_with_breaks([&](double y) { return -k.faa(beta * y, y); }, 0.0, Y, breaks, kTol);
      auto breaks_inf = probe_breaks(a, beta, std::numeric_limits<double>::infinity());
      breaks_inf.push_back(Y);
      const quad::Result a3 = quad::adaptive_with_breaks([&](double y) { return -k.faa(beta * y, y); }, 0.0,
                                                         std::numeric_limits<double>::infinity(), breaks_inf, kTol);
      const quad::Result a4 = quad::adaptive([&](double y) { return k.faa(beta * y, y); }, Y,
                                             std::numeric_limits<double>::infinity(), kTol);
      ev.parts.A2 = a2.value;
      ev.parts.A3 = a3.value;
      ev.parts.A4 = a4.value;
      ev.error += a2.error + a3.error + a4.error;
    }
  }

  const PiecewiseCurve& curve = shape.curve;
  const int orders = values_only ? 1 : 3;

  // Patch outside the box.
  {
    std::vector<double> breaks = curve.y_breakpoints();
    breaks.push_back(M);
    breaks.push_back(Y);
    const double ytop = curve.max_y();
    auto g = [&](int o, double y) {
      const auto chord = curve.horizontal_chord(y);
      if (!chord) return 0.0;
      if (y >= M) return k.eval(o, chord->right, y) - k.eval(o, chord->left, y);
      if (chord->right <= M) return 0.0;
      return k.eval(o, chord->right, y) - k.eval(o, std::max(chord->left, M), y);
    };
    for (int o = 0; o < orders; ++o) {
      const quad::Result r = quad::endpoint_singular_with_breaks([&](double y) { return g(o, y); }, 0.0, ytop,
                                                                 breaks, kTol);
      (o == 0 ? ev.parts.B : o == 1 ? ev.dB : ev.d2B) = r.value;
      ev.error += r.error;
    }
  }

  // Wedge points removed by the origin fillet, entering with a minus sign.
  {
    const double ytop = shape.upper_tangency.y;
    auto g = [&](int o, double y) {
      const auto chord = curve.horizontal_chord(y);
      const double left = chord ? std::max(chord->left, beta * y) : beta * y;
      return -(k.eval(o, left, y) - k.eval(o, beta * y, y));
    };
    for (int o = 0; o < orders; ++o) {
      const quad::Result r = quad::endpoint_singular([&](double y) { return g(o, y); }, 0.0, ytop, kTol);
      (o == 0 ? ev.parts.C : o == 1 ? ev.dC : ev.d2C) = r.value;
      ev.error += r.error;
    }
  }
  return ev;
}

}  // namespace

void check_probe(const CornerSpec& spec, double a) {
  if (!(a >= 2.0 * spec.delta && a <= spec.M / 2.0)) {
    throw Error(ErrorKind::probe_out_of_range, "probe must satisfy 2 delta <= a <= M/2");
  }
}

OracleParts oracle_values(const CornerShape& shape, const GsqgParams& params, double a) {
  params.validate();
  return evaluate(shape, params, a, true).parts;
}

WedgeOracleReport wedge_oracle(const CornerShape& shape, const GsqgParams& params, double a) {
  params.validate();
  const Evaluation ev = evaluate(shape, params, a, false);
  const double c = params.c_alpha;
  WedgeOracleReport r;
  r.alpha = params.alpha;
  r.beta = shape.spec.beta;
  r.delta = shape.spec.delta;
  r.M = shape.spec.M;
  r.a = a;
  r.parts = ev.parts;
  r.dA = ev.dA;
  r.dB = ev.dB;
  r.dC = ev.dC;
  r.d2B = ev.d2B;
  r.d2C = ev.d2C;
  r.v2 = c * (ev.parts.A + ev.parts.B + ev.parts.C);
  r.d1_v2 = c * (ev.dA + ev.dB + ev.dC);
  r.d2_v2 = c * (ev.parts.A1 + ev.parts.A2 + ev.d2B + ev.d2C);
  r.quadrature_error_estimate = c * ev.error;
  return r;
}

WedgeOracleReport area_velocity_v2(const CornerSpec& spec, const GsqgParams& params, double a) {
  check_probe(spec, a);
  params.validate();
  const CornerShape shape = corner_shape(spec);
  const Evaluation ev = evaluate(shape, params, a, true);
  WedgeOracleReport r;
  r.alpha = params.alpha;
  r.beta = spec.beta;
  r.delta = spec.delta;
  r.M = spec.M;
  r.a = a;
  r.parts = ev.parts;
  r.v2 = params.c_alpha * (ev.parts.A + ev.parts.B + ev.parts.C);
  r.quadrature_error_estimate = params.c_alpha * ev.error;
  return r;
}

WedgeOracleReport oracle_d2_v2(const CornerSpec& spec, const GsqgParams& params, double a) {
  check_probe(spec, a);
  return wedge_oracle(corner_shape(spec), params, a);
}

double oracle_d1_v(const CornerSpec& spec, const GsqgParams& params, double a) {
  params.validate();
  if (params.alpha == 0.0) {
    throw Error(ErrorKind::alpha_zero_unsupported, "the first-derivative oracle is defined for alpha > 0");
  }
  check_probe(spec, a);
  return wedge_oracle(corner_shape(spec), params, a).d1_v2;
}

double polar_velocity_v2(const CornerShape& shape, const GsqgParams& params, double a) {
  params.validate();
  const Vec2 p{a, 0.0};
  const double alpha = params.alpha;
  std::vector<double> breaks;
  for (std::size_t i = 0; i < shape.curve.piece_count(); ++i) {
    const Vec2 q = shape.curve.piece(i).start - p;
    const double psi = std::atan2(q.y, q.x);
    if (psi > 0.0 && psi < std::numbers::pi) breaks.push_back(psi);
  }
  auto integrand = [&](double psi) {
    psi = std::clamp(psi, 1e-12, std::numbers::pi - 1e-12);
    const double R = shape.curve.ray_exit(p, {std::cos(psi), std::sin(psi)});
    require(R > 0.0, ErrorKind::invalid_contour, "ray from the probe does not exit the patch");
    const double w = alpha == 1.0 ? std::log(R) : std::pow(R, 1.0 - alpha) / (1.0 - alpha);
    return -std::cos(psi) * w;
  };
  const quad::Result r =
      quad::endpoint_singular_with_breaks(integrand, 0.0, std::numbers::pi, breaks, kTol);
  return params.c_alpha * r.value;
}

CrossValidation cross_validate(const ContourState& state, const CornerSpec& spec, const GsqgParams& params,
                               double a) {
  const Contour& c = state.contour;
  std::size_t k = c.size();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (std::abs(c.nodes[i].y) <= 1e-12 * spec.M && std::abs(c.nodes[i].x - a) <= 1e-9 * spec.M) k = i;
  }
  require(k < c.size(), ErrorKind::node_not_found, "no contour node at the probe (a, 0)");
  const VelocityField field = contour_velocity(state, params);
  const std::vector<Vec2> d2 = arc_second_derivative(state, field.v);
  const WedgeOracleReport w = wedge_oracle(corner_shape(spec), params, a);
  CrossValidation r;
  r.node = k;
  r.a = a;
  r.v2_contour = field.v[k].y;
  r.v2_oracle = w.v2;
  r.v2_rel = std::abs(r.v2_contour - w.v2) / std::abs(w.v2);
  r.d2_contour = d2[k].y;
  r.d2_oracle = w.d2_v2;
  r.d2_rel = std::abs(r.d2_contour - w.d2_v2) / std::abs(w.d2_v2);
  return r;
}

std::string WedgeOracleReport::csv_header() {
  return "alpha,beta,delta,M,a,v2,d1_v2,d2_v2,A,B,C,A1,A2,A3,A4,err_est";
}

std::string WedgeOracleReport::csv_row() const {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g",
                alpha, beta, delta, M, a, v2, d1_v2, d2_v2, parts.A, parts.B, parts.C, parts.A1, parts.A2, parts.A3,
                parts.A4, quadrature_error_estimate);
  return buf;
}

}  // namespace gsqg
