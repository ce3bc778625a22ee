#pragma once

#include <functional>
#include <span>

namespace gsqg::quad {

struct Result {
  double value = 0.0;
  double error = 0.0;
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (15/31 point) on [a, b]; b may be +infinity.
/// `tol` is relative to the L1 norm of the integrand.
Result adaptive(const Integrand& f, double a, double b, double tol = 1e-12, unsigned max_depth = 15);

/// adaptive() on each panel between the sorted interior breakpoints that fall
/// inside (a, b), so that kinks in the integrand land on panel boundaries.
Result adaptive_with_breaks(const Integrand& f, double a, double b, std::span<const double> breaks,
                            double tol = 1e-12, unsigned max_depth = 15);

/// Double-exponential (tanh-sinh) rule on a finite interval; tolerates
/// endpoint singularities of the integrand or of its derivatives.
Result endpoint_singular(const Integrand& f, double a, double b, double tol = 1e-12);

/// endpoint_singular() on each panel between breakpoints.
Result endpoint_singular_with_breaks(const Integrand& f, double a, double b,
                                     std::span<const double> breaks, double tol = 1e-12);

}  // namespace gsqg::quad
