#include "gsqg/analytic.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/tools/roots.hpp>

#include "gsqg/error.hpp"
#include "gsqg/quadrature.hpp"

namespace gsqg {

void GsqgParams::validate() const {
  require(std::isfinite(alpha) && alpha >= 0.0 && alpha < 2.0, ErrorKind::invalid_parameter,
          "alpha must lie in [0, 2)");
  require(std::isfinite(c_alpha) && c_alpha > 0.0, ErrorKind::invalid_parameter,
          "c_alpha must be positive");
}

double Annulus::mid_radius() const { return std::sqrt(inner_radius * outer_radius); }

namespace {

void check_alpha_beta(double alpha, double beta, double alpha_max, bool closed) {
  const bool alpha_ok = alpha >= 0.0 && (closed ? alpha <= alpha_max : alpha < alpha_max);
  require(std::isfinite(alpha) && alpha_ok, ErrorKind::invalid_parameter, "alpha out of range");
  require(std::isfinite(beta) && beta >= 0.0, ErrorKind::invalid_parameter, "beta must be >= 0");
}

double wallis(double alpha) {
  return 0.5 * std::sqrt(std::numbers::pi) * std::tgamma(0.5 * (alpha + 1.0)) /
         std::tgamma(0.5 * alpha + 1.0);
}

}  // namespace

double cos_power_integral(double alpha, double beta, double tol) {
  check_alpha_beta(alpha, beta, 2.0, true);
  require(tol > 0.0, ErrorKind::invalid_parameter, "tol must be positive");
  const double lo = -std::atan(beta);
  double left = 0.0;
  if (alpha == 0.0) {
    left = -lo;
  } else if (lo < 0.0) {
    left = quad::adaptive([alpha](double t) { return std::pow(std::cos(t), alpha); }, lo, 0.0,
                          std::min(tol, 1e-13))
               .value;
  }
  return left + wallis(alpha);
}

FRecord eval_F(double alpha, double beta, double tol) {
  check_alpha_beta(alpha, beta, 2.0, false);
  FRecord rec;
  rec.alpha = alpha;
  rec.beta = beta;
  rec.integral_I = cos_power_integral(alpha, beta, tol);
  const double q = beta * beta + 1.0;
  rec.f_value = beta / q - alpha * rec.integral_I / std::pow(q, 1.0 - 0.5 * alpha);
  return rec;
}

double scaled_F(double alpha, double beta, double tol) {
  check_alpha_beta(alpha, beta, 2.0, false);
  const double q = beta * beta + 1.0;
  return beta * std::pow(q, -0.5 * alpha) - alpha * cos_power_integral(alpha, beta, tol);
}

double scaled_F_derivative(double alpha, double beta) {
  check_alpha_beta(alpha, beta, 2.0, false);
  return (1.0 - alpha) * std::pow(beta * beta + 1.0, -0.5 * alpha);
}

double beta_star(double alpha, double tol) {
  require(std::isfinite(alpha), ErrorKind::invalid_parameter, "alpha must be finite");
  require(tol > 0.0, ErrorKind::invalid_parameter, "tol must be positive");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw Error(ErrorKind::no_root, "F(alpha, .) has no zero unless 0 < alpha < 1");
  }
  auto g = [alpha](double b) { return scaled_F(alpha, b, 1e-14); };
  double lo = 0.0;
  double hi = 1.0;
  while (g(hi) <= 0.0) {
    lo = hi;
    hi *= 2.0;
    require(hi < 1e12, ErrorKind::no_root, "no sign change found while expanding the bracket");
  }
  const auto stop = [tol](double a, double b) { return std::abs(b - a) <= 1e-3 * tol; };
  const auto [a, b] = boost::math::tools::bisect(g, lo, hi, stop);
  return 0.5 * (a + b);
}

Annulus annulus(double alpha, double beta, double delta, double M, double c_constant) {
  GsqgParams{alpha, 1.0}.validate();
  require(delta > 0.0 && M > 0.0 && delta < M, ErrorKind::invalid_parameter,
          "annulus requires 0 < delta < M");
  require(c_constant > 0.0, ErrorKind::invalid_parameter, "c_constant must be positive");
  const double F = std::abs(eval_F(alpha, beta).f_value);
  Annulus out;
  out.c_constant = c_constant;
  out.inner_radius = F > 0.0 ? delta / (c_constant * std::sqrt(F)) : INFINITY;
  out.outer_radius = c_constant * std::pow(F, 1.0 / (1.0 + alpha)) * M;
  if (!(out.inner_radius < out.outer_radius)) {
    throw Error(ErrorKind::degenerate_annulus, "inner radius is not below outer radius");
  }
  return out;
}

double predicted_d2s_v2(const GsqgParams& params, double beta, double a) {
  params.validate();
  require(a > 0.0, ErrorKind::invalid_parameter, "a must be positive");
  return params.c_alpha * eval_F(params.alpha, beta).f_value / std::pow(a, 1.0 + params.alpha);
}

double predicted_ds_v(const GsqgParams& params, double beta, double a) {
  params.validate();
  if (params.alpha == 0.0) {
    throw Error(ErrorKind::alpha_zero_unsupported,
                "the first-derivative prediction is logarithmic at alpha = 0");
  }
  require(a > 0.0, ErrorKind::invalid_parameter, "a must be positive");
  return -params.c_alpha * eval_F(params.alpha, beta).f_value /
         (params.alpha * std::pow(a, params.alpha));
}

}  // namespace gsqg
