#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "gsqg/shape.hpp"
#include "gsqg/vec2.hpp"

namespace gsqg {

/// Corner geometry: the patch coincides with {beta x2 < x1, x in (0,inf)^2}
/// inside [-M, M]^2 away from the disk |x| <= delta.
struct CornerSpec {
  double beta = 0.0;
  double delta = 0.01;
  double M = 1.0;
  /// Enclosed area; 0 selects the default 2 M^2.
  double target_area = 0.0;

  double area() const { return target_area > 0.0 ? target_area : 2.0 * M * M; }
  void validate() const;
};

/// Closed counterclockwise polygon with material labels.
struct Contour {
  std::vector<Vec2> nodes;
  /// Parameter value of each node, increasing from -pi and below pi.
  std::vector<double> labels;
  /// Position of each node's material ancestor at t = 0.
  std::vector<Vec2> ancestors;

  std::size_t size() const { return nodes.size(); }
  /// Throws invalid-contour or self-intersection unless the node count is at
  /// least 16, the orientation is counterclockwise and the polygon is simple.
  void validate() const;
  /// Contour with labels from cumulative chord fraction and ancestors equal to nodes.
  static Contour from_nodes(std::vector<Vec2> nodes);
};

struct ContourState {
  Contour contour;
  double time = 0.0;
  std::vector<double> arc_length;
  std::vector<Vec2> tangent;
  /// Outward unit normal, N = -perp(T).
  std::vector<Vec2> normal;
  std::vector<double> curvature;
  double perimeter = 0.0;

  std::size_t size() const { return contour.size(); }
};

/// Exact boundary of a corner patch: a rounded convex polygon. See corner_shape().
struct CornerShape {
  CornerSpec spec;
  PiecewiseCurve curve;
  std::vector<Vec2> vertices;
  std::vector<double> tangency;
  /// Side length of the enclosing polygon.
  double width = 0.0;
  double origin_radius = 0.0;
  std::size_t lower_piece = 0;
  std::size_t upper_piece = 0;
  /// Tangency points of the origin fillet on the lower and upper edge.
  Vec2 lower_tangency;
  Vec2 upper_tangency;

  /// Arc-length position of (a, 0) on the lower edge.
  double lower_edge_position(double a) const;
  /// Arc-length position of the upper-edge point at distance r from the origin.
  double upper_edge_position(double r) const;
};

/// Node spacing h(x) = min(max_spacing, min_spacing + growth |x|).
struct SpacingField {
  double min_spacing = 1e-3;
  double growth = 0.02;
  double max_spacing = 0.04;

  double operator()(Vec2 x) const;
};

struct SamplingOptions {
  double growth = 0.02;
  /// max_spacing as a fraction of M.
  double max_spacing_fraction = 0.04;
  /// Abscissas on the lower edge that must be nodes.
  std::vector<double> lower_pins;
  /// Distances from the origin along the upper edge that must be nodes.
  std::vector<double> upper_pins;
};

/// The polygon with vertices (0,0), (W,0), (W,W), (beta W, W) for beta < 1,
/// (0,0), (W,0), (W,W) for beta = 1 and (0,0), (W,0), (W, W/beta) for beta > 1,
/// with every vertex rounded. The origin fillet touches both edges at distance
/// delta; the outer fillets touch outside [-M, M]^2. W is root-found so that the
/// enclosed area equals spec.area().
CornerShape corner_shape(const CornerSpec& spec);

/// Samples corner_shape(spec) with graded spacing (finest, 1/nodes_per_unit, at
/// the origin). Piece junctions and requested pins are nodes.
Contour build_corner_patch(const CornerSpec& spec, double nodes_per_unit, const SamplingOptions& options = {});

enum class Edge { lower, upper };

struct ConvexifiedShape {
  PiecewiseCurve curve;
  double mu = 0.0;
  double symmetric_difference = 0.0;
  Edge edge = Edge::lower;
  Vec2 tangency;
};

/// Strictly convex modification of the corner shape with zero curvature only at
/// the tangency point, which lies at distance tangency_a from the origin on the
/// chosen edge and where the tangent matches the edge. The curvature bump is
/// sized so that the symmetric difference with the corner shape is epsilon / 2.
ConvexifiedShape convexified_shape(const CornerShape& base, double epsilon, double tangency_a,
                                   Edge edge = Edge::lower);

/// Samples a convexified shape with the graded spacing of build_corner_patch();
/// node 0 is the tangency point. Throws infeasible-epsilon when a node other than
/// the tangency node has non-positive discrete curvature.
Contour sample_convexified(const ConvexifiedShape& shape, const CornerSpec& spec, double nodes_per_unit,
                           const SamplingOptions& options = {});

/// convexified_shape() of corner_shape(spec), sampled; nodes_per_unit = 0 selects 16 / delta.
Contour build_convexified_patch(const CornerSpec& spec, double epsilon, double tangency_a,
                                Edge edge = Edge::lower, double nodes_per_unit = 0.0,
                                const SamplingOptions& options = {});

/// Arc length, tangent, normal and curvature from the discrete curve. T and
/// dT/ds use three-point nonuniform differences in arc length, and κ = -dT/ds · N.
ContourState frame(const Contour& contour, double time = 0.0);

/// Signed curvature of the circle through three consecutive nodes.
std::vector<double> menger_curvature(const Contour& contour);

/// Redistributes nodes at equal chord spacing along a periodic cubic spline of
/// the polyline. Ancestors are interpolated on the same spline parameter.
Contour resample(const Contour& contour, double target_spacing);

/// Like resample(), with the local gap following `spacing` evaluated at the node.
Contour resample_graded(const Contour& contour, const std::function<double(Vec2)>& spacing);

double signed_area(const std::vector<Vec2>& polygon);
double perimeter(const std::vector<Vec2>& polygon);
bool is_simple(const std::vector<Vec2>& polygon);
bool point_in_polygon(const std::vector<Vec2>& polygon, Vec2 p);

/// Intersection of two convex counterclockwise polygons (Sutherland-Hodgman).
std::vector<Vec2> convex_clip(const std::vector<Vec2>& subject, const std::vector<Vec2>& clip);
/// |A| + |B| - 2 |A ∩ B| for convex counterclockwise polygons.
double convex_symmetric_difference(const std::vector<Vec2>& a, const std::vector<Vec2>& b);

}  // namespace gsqg
