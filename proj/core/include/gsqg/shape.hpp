#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "gsqg/vec2.hpp"

namespace gsqg {

enum class PieceRole { lower_edge, upper_edge, origin_fillet, closure_segment, closure_fillet };

/// A piece of constant base curvature: a segment when kappa0 == 0, otherwise a
/// counterclockwise circular arc of radius 1/kappa0.
struct CurvePiece {
  Vec2 start;
  double theta0 = 0.0;
  double length = 0.0;
  double kappa0 = 0.0;
  PieceRole role = PieceRole::closure_segment;
};

/// Extra curvature mu * sin^2(pi s / period) added along the whole curve, with s
/// measured from the curve's start point.
struct CurvatureBump {
  double mu = 0.0;
  double period = 1.0;
};

struct HorizontalChord {
  double left = 0.0;
  double right = 0.0;
};

/// Arc-length parametrized curve made of consecutive pieces. Without a bump the
/// geometry is exact (closed-form segments and arcs); with a bump the tangent
/// angle is still closed form and positions come from panelled Gauss-Legendre.
class PiecewiseCurve {
 public:
  PiecewiseCurve() = default;
  /// With `chain` (always implied by a nonzero bump) the start point and angle of
  /// every piece after the first are recomputed from the previous piece's end;
  /// otherwise the given starts are kept as they are.
  explicit PiecewiseCurve(std::vector<CurvePiece> pieces, CurvatureBump bump = {}, bool chain = false);

  double length() const { return length_; }
  std::size_t piece_count() const { return pieces_.size(); }
  const CurvePiece& piece(std::size_t i) const { return pieces_[i]; }
  double piece_start(std::size_t i) const { return offsets_[i]; }
  std::size_t piece_index(double s) const;
  const CurvatureBump& bump() const { return bump_; }
  bool exact() const { return bump_.mu == 0.0; }

  Vec2 point(double s) const;
  double angle(double s) const;
  Vec2 tangent(double s) const;
  double curvature(double s) const;
  /// Position reached after the full length; equals point(0) for a closed curve.
  Vec2 end_point() const { return end_; }
  double end_angle() const;

  /// Enclosed area by Green's formula, 1/2 * integral of (x y' - y x') ds.
  double area() const;
  /// Points at equal arc-length steps (no closing duplicate).
  std::vector<Vec2> dense(std::size_t count) const;

  /// Exact queries (require exact()). The curve must be convex and closed.
  std::optional<HorizontalChord> horizontal_chord(double y) const;
  /// Largest t > t_min with p + t d on the curve.
  double ray_exit(Vec2 p, Vec2 d, double t_min = 1e-12) const;
  /// Heights where a horizontal chord endpoint switches piece or turns.
  std::vector<double> y_breakpoints() const;
  double min_y() const;
  double max_y() const;

 private:
  struct Panel {
    double s0;
    Vec2 p0;
  };
  Vec2 local_point(std::size_t i, double ds) const;
  double local_angle(std::size_t i, double ds) const;
  Vec2 integrate_panel(std::size_t i, double ds0, double ds1, Vec2 p0) const;

  std::vector<CurvePiece> pieces_;
  std::vector<double> offsets_;
  std::vector<std::vector<Panel>> panels_;
  CurvatureBump bump_;
  double length_ = 0.0;
  Vec2 end_;
};

/// Rounded convex polygon: vertices in counterclockwise order, each rounded by a
/// circular fillet whose tangency points lie at distance `tangency[i]` from the
/// vertex. `roles` gives the role of the edge leaving vertex i (the fillet role
/// is taken from `fillet_roles[i]`). The curve starts at the outgoing tangency
/// point of vertex 0.
PiecewiseCurve rounded_polygon(const std::vector<Vec2>& vertices, const std::vector<double>& tangency,
                               const std::vector<PieceRole>& edge_roles,
                               const std::vector<PieceRole>& fillet_roles);

/// Places sample positions along [0, curve.length()) so that the local gap is
/// proportional to spacing(point). Every value in `pins` is a sample position.
/// Position 0 is always a sample.
std::vector<double> sample_positions(const PiecewiseCurve& curve,
                                     const std::function<double(Vec2)>& spacing,
                                     std::vector<double> pins);

}  // namespace gsqg
