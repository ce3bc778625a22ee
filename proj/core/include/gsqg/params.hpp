#pragma once

namespace gsqg {

/// Equation parameters. alpha = 0 is 2D Euler, alpha = 1 is SQG.
///
/// c_alpha only rescales time; every sign and bending conclusion is
/// invariant under c_alpha > 0, so the default is 1.
struct GsqgParams {
  double alpha = 0.0;
  double c_alpha = 1.0;

  /// Throws Error(invalid_parameter) unless 0 <= alpha < 2 and c_alpha > 0.
  void validate() const;
};

}  // namespace gsqg
