#pragma once

#include <cstddef>
#include <string>

#include "gsqg/geometry.hpp"
#include "gsqg/params.hpp"
#include "gsqg/velocity.hpp"

namespace gsqg {

/// Pieces of the vertical velocity at (a, 0) written as
///   v2 = c (A + B + C),
/// A over the ideal wedge inside [-M, M]^2, B over the patch outside the box and
/// C = -(integral over the wedge points cut off by the origin fillet). Each area
/// integral is reduced to a 1D integral in y2 with the inner y1 integral in
/// closed form.
struct OracleParts {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
  double A1 = 0.0;
  double A2 = 0.0;
  double A3 = 0.0;
  double A4 = 0.0;
};

struct WedgeOracleReport {
  double alpha = 0.0;
  double beta = 0.0;
  double delta = 0.0;
  double M = 0.0;
  double a = 0.0;
  double v2 = 0.0;
  double d1_v2 = 0.0;
  double d2_v2 = 0.0;
  OracleParts parts;
  /// First and second a-derivatives of A, B and C (A'' = A1 + A2).
  double dA = 0.0;
  double dB = 0.0;
  double dC = 0.0;
  double d2B = 0.0;
  double d2C = 0.0;
  double quadrature_error_estimate = 0.0;

  static std::string csv_header();
  std::string csv_row() const;
};

/// Probe range check shared by the oracle entry points: 2 delta <= a <= M/2.
void check_probe(const CornerSpec& spec, double a);

/// A, B and C (values only) on a prebuilt shape; no range check on a.
OracleParts oracle_values(const CornerShape& shape, const GsqgParams& params, double a);

/// Full report: v2, d1_v2, d2_v2 and every part, all by one-dimensional
/// quadrature of closed-form inner integrals.
WedgeOracleReport wedge_oracle(const CornerShape& shape, const GsqgParams& params, double a);

/// v2 with parts A, B and C; derivative fields and A1..A4 are left at zero.
WedgeOracleReport area_velocity_v2(const CornerSpec& spec, const GsqgParams& params, double a);
WedgeOracleReport oracle_d2_v2(const CornerSpec& spec, const GsqgParams& params, double a);
/// d v2 / da at (a, 0); alpha = 0 is rejected.
double oracle_d1_v(const CornerSpec& spec, const GsqgParams& params, double a);

/// Independent route: v2 = -c/(1-alpha) * integral over psi in (0, pi) of
/// cos(psi) R(psi)^(1-alpha), with R the distance from (a, 0) to the boundary
/// along direction psi (log R at alpha = 1).
double polar_velocity_v2(const CornerShape& shape, const GsqgParams& params, double a);

struct CrossValidation {
  std::size_t node = 0;
  double a = 0.0;
  double v2_contour = 0.0;
  double v2_oracle = 0.0;
  double v2_rel = 0.0;
  /// Second arc-length derivative of v2 along the lower edge, against oracle d2 v2.
  double d2_contour = 0.0;
  double d2_oracle = 0.0;
  double d2_rel = 0.0;
};

/// Contour velocity at the lower-edge node (a, 0) of a corner patch against the
/// area oracle on corner_shape(spec). Throws node-not-found unless (a, 0) is a node.
CrossValidation cross_validate(const ContourState& state, const CornerSpec& spec, const GsqgParams& params,
                               double a);

}  // namespace gsqg
