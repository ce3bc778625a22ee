#include "gsqg/velocity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gsqg/error.hpp"

namespace gsqg {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double label_gap(const std::vector<double>& labels, std::size_t i) {
  const std::size_t n = labels.size();
  return (i + 1 < n ? labels[i + 1] : labels[0] + kTwoPi) - labels[i];
}

}  // namespace

std::vector<Vec2> label_derivative(const std::vector<Vec2>& f, const std::vector<double>& labels) {
  const std::size_t n = f.size();
  std::vector<Vec2> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t im = (i + n - 1) % n;
    const std::size_t ip = (i + 1) % n;
    const double h1 = label_gap(labels, im);
    const double h2 = label_gap(labels, i);
    d[i] = (-h2 / (h1 * (h1 + h2))) * f[im] + ((h2 - h1) / (h1 * h2)) * f[i] + (h1 / (h2 * (h1 + h2))) * f[ip];
  }
  return d;
}

double parametrization_spread(const std::vector<Vec2>& nodes, const std::vector<double>& labels) {
  const auto d = label_derivative(nodes, labels);
  double lo = INFINITY;
  double hi = 0.0;
  for (const Vec2& v : d) {
    lo = std::min(lo, norm(v));
    hi = std::max(hi, norm(v));
  }
  return hi / lo - 1.0;
}

std::vector<Vec2> kernel_velocity(const std::vector<Vec2>& x, const std::vector<double>& labels,
                                  const GsqgParams& params) {
  const std::size_t n = x.size();
  require(n >= 4 && labels.size() == n, ErrorKind::invalid_contour, "kernel needs matching nodes and labels");
  const double alpha = params.alpha;
  const std::vector<Vec2> P = label_derivative(x, labels);
  std::vector<double> gap(n);
  for (std::size_t i = 0; i < n; ++i) {
    gap[i] = label_gap(labels, i);
    require(gap[i] > 0.0, ErrorKind::degenerate_nodes, "labels must be strictly increasing");
  }
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = 0.5 * (gap[(i + n - 1) % n] + gap[i]);
  std::vector<Vec2> u(n);

  if (alpha > 0.0) {
    const double half = -0.5 * alpha;
    // Node values of the subtracted integrand are paired: the same |dx|^-alpha
    // serves target j with source k and target k with source j.
    for (std::size_t j = 0; j < n; ++j) {
      const Vec2 xj = x[j];
      const Vec2 pj = P[j];
      double sx = 0.0;
      double sy = 0.0;
      for (std::size_t k = j + 1; k < n; ++k) {
        const double dx = x[k].x - xj.x;
        const double dy = x[k].y - xj.y;
        const double g = std::exp(half * std::log(dx * dx + dy * dy));
        const double ex = (P[k].x - pj.x) * g;
        const double ey = (P[k].y - pj.y) * g;
        sx += w[k] * ex;
        sy += w[k] * ey;
        u[k].x -= w[j] * ex;
        u[k].y -= w[j] * ey;
      }
      u[j].x += sx;
      u[j].y += sy;
    }
    const double corr = 1.0 / (2.0 - alpha) - 0.5;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t jp = (j + 1) % n;
      const std::size_t jm = (j + n - 1) % n;
      const double gp = std::pow(norm(x[jp] - x[j]), -alpha);
      const double gm = std::pow(norm(x[jm] - x[j]), -alpha);
      u[j] += (corr * gap[j] * gp) * (P[jp] - P[j]) + (corr * gap[jm] * gm) * (P[jm] - P[j]);
    }
    const double scale = params.c_alpha / alpha;
    for (Vec2& v : u) v *= scale;
    return u;
  }

  for (std::size_t j = 0; j < n; ++j) {
    const Vec2 xj = x[j];
    double sx = 0.0;
    double sy = 0.0;
    for (std::size_t k = j + 1; k < n; ++k) {
      const double dx = x[k].x - xj.x;
      const double dy = x[k].y - xj.y;
      const double g = 0.5 * std::log(dx * dx + dy * dy);
      sx += w[k] * g * P[k].x;
      sy += w[k] * g * P[k].y;
      u[k].x += w[j] * g * P[j].x;
      u[k].y += w[j] * g * P[j].y;
    }
    u[j].x += sx;
    u[j].y += sy;
  }
  // Replace the trapezoid on the two panels adjacent to each target by the
  // product rule for log|t| against linear interpolation of d0 gamma.
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t jp = (j + 1) % n;
    const std::size_t jm = (j + n - 1) % n;
    const double lp = std::log(norm(x[jp] - x[j]));
    const double lm = std::log(norm(x[jm] - x[j]));
    u[j] -= (0.5 * gap[j] * lp) * P[jp] + (0.5 * gap[jm] * lm) * P[jm];
    u[j] += gap[j] * ((0.5 * lp - 0.75) * P[j] + (0.5 * lp - 0.25) * P[jp]);
    u[j] += gap[jm] * ((0.5 * lm - 0.75) * P[j] + (0.5 * lm - 0.25) * P[jm]);
  }
  for (Vec2& v : u) v *= -params.c_alpha;
  return u;
}

std::vector<double> lambda_from_velocity(const std::vector<Vec2>& nodes, const std::vector<double>& labels,
                                         const std::vector<Vec2>& u) {
  const std::size_t n = nodes.size();
  const auto P = label_derivative(nodes, labels);
  const auto du = label_derivative(u, labels);
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = dot(P[i], du[i]) / dot(P[i], P[i]);
  std::vector<double> G(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) G[i] = G[i - 1] + 0.5 * (labels[i] - labels[i - 1]) * (g[i - 1] + g[i]);
  const double total = G[n - 1] + 0.5 * label_gap(labels, n - 1) * (g[n - 1] + g[0]);
  std::vector<double> lambda(n);
  for (std::size_t i = 0; i < n; ++i) {
    lambda[i] = (labels[i] - labels[0]) / kTwoPi * total - G[i];
  }
  return lambda;
}

VelocityField contour_velocity(const std::vector<Vec2>& nodes, const std::vector<double>& labels,
                               const GsqgParams& params, bool check) {
  params.validate();
  const std::size_t n = nodes.size();
  if (check) {
    for (std::size_t i = 0; i < n; ++i) {
      const double a = norm(nodes[(i + 1) % n] - nodes[i]);
      const double b = norm(nodes[(i + 2) % n] - nodes[(i + 1) % n]);
      require(a > 0.0 && b > 0.0, ErrorKind::degenerate_nodes, "two consecutive nodes coincide");
      require(std::max(a / b, b / a) <= kMaxGapRatio, ErrorKind::unresolved_singularity,
              "adjacent node gaps differ by more than the allowed ratio");
    }
    require(is_simple(nodes), ErrorKind::self_intersection, "contour self-intersects");
    if (params.alpha >= 1.0) {
      require(parametrization_spread(nodes, labels) <= 0.01, ErrorKind::nonuniform_parametrization,
              "alpha >= 1 needs |d0 gamma| constant to 1%");
    }
  }
  VelocityField field;
  field.v = kernel_velocity(nodes, labels, params);
  field.lambda.assign(n, 0.0);
  if (params.alpha >= 1.0) {
    field.lambda = lambda_from_velocity(nodes, labels, field.v);
    const auto P = label_derivative(nodes, labels);
    for (std::size_t i = 0; i < n; ++i) field.v[i] += field.lambda[i] * P[i];
  }
  return field;
}

VelocityField contour_velocity(const ContourState& state, const GsqgParams& params) {
  return contour_velocity(state.contour.nodes, state.contour.labels, params, true);
}

std::vector<double> lambda_coefficients(const ContourState& state, const GsqgParams& params) {
  params.validate();
  if (params.alpha < 1.0) {
    throw Error(ErrorKind::invalid_parameter, "lambda is defined for 1 <= alpha < 2 only");
  }
  const auto& c = state.contour;
  return lambda_from_velocity(c.nodes, c.labels, kernel_velocity(c.nodes, c.labels, params));
}

std::vector<Vec2> arc_derivative(const ContourState& state, const std::vector<Vec2>& f) {
  const std::size_t n = f.size();
  std::vector<Vec2> d(n);
  const auto& s = state.arc_length;
  auto gap = [&](std::size_t i) { return (i + 1 < n ? s[i + 1] : state.perimeter) - s[i]; };
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t im = (i + n - 1) % n;
    const std::size_t ip = (i + 1) % n;
    const double h1 = gap(im);
    const double h2 = gap(i);
    d[i] = (-h2 / (h1 * (h1 + h2))) * f[im] + ((h2 - h1) / (h1 * h2)) * f[i] + (h1 / (h2 * (h1 + h2))) * f[ip];
  }
  return d;
}

std::vector<Vec2> arc_second_derivative(const ContourState& state, const std::vector<Vec2>& f) {
  const std::size_t n = f.size();
  std::vector<Vec2> d(n);
  const auto& s = state.arc_length;
  auto gap = [&](std::size_t i) { return (i + 1 < n ? s[i + 1] : state.perimeter) - s[i]; };
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t im = (i + n - 1) % n;
    const std::size_t ip = (i + 1) % n;
    const double h1 = gap(im);
    const double h2 = gap(i);
    d[i] = (2.0 / (h1 * h2 * (h1 + h2))) * (h1 * f[ip] - (h1 + h2) * f[i] + h2 * f[im]);
  }
  return d;
}

}  // namespace gsqg
