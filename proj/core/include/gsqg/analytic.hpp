#pragma once

#include "gsqg/params.hpp"

namespace gsqg {

struct FRecord {
  double alpha = 0.0;
  double beta = 0.0;
  /// Integral of cos^alpha over [-atan(beta), pi/2].
  double integral_I = 0.0;
  double f_value = 0.0;
};

struct Annulus {
  double inner_radius = 0.0;
  double outer_radius = 0.0;
  double c_constant = 1.0;

  bool contains(double r) const { return inner_radius < r && r < outer_radius; }
  double mid_radius() const;
};

inline constexpr double kDefaultTol = 1e-12;

/// Integral of cos^alpha(theta) over [-atan(beta), pi/2].
///
/// The interval is split at 0. The right half is the Wallis integral
/// sqrt(pi)/2 * Gamma((alpha+1)/2) / Gamma(alpha/2+1); the left half has a smooth
/// integrand and is done by Gauss-Kronrod. Only the left half depends on beta.
///
/// alpha = 2 is accepted here (outside the model range) so the rule can be
/// checked against the half-angle formula.
double cos_power_integral(double alpha, double beta, double tol = kDefaultTol);

/// Bending criterion: beta/(beta^2+1) - alpha * I(alpha,beta) / (beta^2+1)^(1-alpha/2).
FRecord eval_F(double alpha, double beta, double tol = kDefaultTol);

/// The F-scaled map G(beta) = (beta^2+1)^(1-alpha/2) F(alpha,beta), strictly monotone
/// in beta whenever alpha != 1.
double scaled_F(double alpha, double beta, double tol = kDefaultTol);

/// Closed form of dG/dbeta: -(alpha-1) / (beta^2+1)^(alpha/2).
double scaled_F_derivative(double alpha, double beta);

/// Unique zero of F(alpha, .) for 0 < alpha < 1. Bisection on G with the bracket
/// grown geometrically from [0, 1]. Throws Error(no_root) outside (0, 1).
double beta_star(double alpha, double tol = 1e-10);

/// Radial window where the leading-order bending asymptotics apply:
/// (|F|^(-1/2) delta / C, C |F|^(1/(1+alpha)) M).
Annulus annulus(double alpha, double beta, double delta, double M, double c_constant = 1.0);

/// Leading term of d^2 v2/da^2 at (a, 0): c_alpha F / a^(1+alpha).
double predicted_d2s_v2(const GsqgParams& params, double beta, double a);

/// Leading term of d v2/da at (a, 0). The error bound is stated for
/// d_s v + c_alpha F / (alpha a^alpha), so the value returned is -c_alpha F / (alpha a^alpha).
/// alpha = 0 is rejected: the Euler analogue is logarithmic and not covered.
double predicted_ds_v(const GsqgParams& params, double beta, double a);

}  // namespace gsqg
