#pragma once

#include <cstddef>
#include <vector>

#include "gsqg/geometry.hpp"
#include "gsqg/params.hpp"
#include "gsqg/vec2.hpp"

namespace gsqg {

struct VelocityField {
  std::vector<Vec2> v;
  /// Tangential reparametrization coefficient; identically zero for alpha < 1.
  std::vector<double> lambda;
};

/// Boundary velocity without the lambda term. For 0 < alpha < 2 this is
///   (c/alpha) * integral of (d0 gamma(eta) - d0 gamma(xi)) / |gamma(xi) - gamma(eta)|^alpha d eta,
/// whose normal part is the velocity induced by the patch with the kernel
/// c (x - y) / |x - y|^(2 + alpha). For alpha = 0 it is the logarithmic form
///   -c * integral of log|gamma(xi) - gamma(eta)| d0 gamma(eta) d eta.
/// Trapezoid weights in the node labels; the two panels next to the target use
/// product integration of the local singularity.
std::vector<Vec2> kernel_velocity(const std::vector<Vec2>& nodes, const std::vector<double>& labels,
                                  const GsqgParams& params);

/// kernel_velocity() plus lambda * d0 gamma for alpha >= 1.
/// Throws self-intersection, unresolved-singularity (adjacent gap ratio above
/// kMaxGapRatio) and nonuniform-parametrization (alpha >= 1 and the spread of
/// |d0 gamma| above 1%).
VelocityField contour_velocity(const ContourState& state, const GsqgParams& params);
VelocityField contour_velocity(const std::vector<Vec2>& nodes, const std::vector<double>& labels,
                               const GsqgParams& params, bool check = true);

/// lambda(xi) = (xi + pi)/(2 pi) * G(pi) - G(xi), where G is the running integral
/// from -pi of d0 gamma . d0 u / |d0 gamma|^2 and u is the kernel velocity.
std::vector<double> lambda_coefficients(const ContourState& state, const GsqgParams& params);
std::vector<double> lambda_from_velocity(const std::vector<Vec2>& nodes, const std::vector<double>& labels,
                                         const std::vector<Vec2>& u);

/// Label derivative d gamma / d xi at every node (three-point, periodic).
std::vector<Vec2> label_derivative(const std::vector<Vec2>& values, const std::vector<double>& labels);

/// Largest over smallest |d0 gamma|, minus one.
double parametrization_spread(const std::vector<Vec2>& nodes, const std::vector<double>& labels);

inline constexpr double kMaxGapRatio = 8.0;

/// Three-point first and second arc-length derivatives of per-node vectors.
std::vector<Vec2> arc_derivative(const ContourState& state, const std::vector<Vec2>& f);
std::vector<Vec2> arc_second_derivative(const ContourState& state, const std::vector<Vec2>& f);

}  // namespace gsqg
