#include "gsqg/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include <boost/math/tools/roots.hpp>

#include "gsqg/error.hpp"
#include "gsqg/spline.hpp"

namespace gsqg {

namespace {

constexpr double kPi = std::numbers::pi;

/// Distance along p(t) = v + t u, t in [0, len], before the segment enters the open box (-M, M)^2.
double distance_outside_box(Vec2 v, Vec2 u, double len, double M) {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (int axis = 0; axis < 2; ++axis) {
    const double p = axis == 0 ? v.x : v.y;
    const double d = axis == 0 ? u.x : u.y;
    if (d == 0.0) {
      if (std::abs(p) >= M) return len;
      continue;
    }
    double t1 = (-M - p) / d;
    double t2 = (M - p) / d;
    if (t1 > t2) std::swap(t1, t2);
    lo = std::max(lo, t1);
    hi = std::min(hi, t2);
  }
  if (!(lo < hi) || hi <= 0.0 || lo >= len) return len;
  return std::max(0.0, lo);
}

std::vector<Vec2> corner_vertices(double beta, double W) {
  if (beta < 1.0) return {{0.0, 0.0}, {W, 0.0}, {W, W}, {beta * W, W}};
  if (beta == 1.0) return {{0.0, 0.0}, {W, 0.0}, {W, W}};
  return {{0.0, 0.0}, {W, 0.0}, {W, W / beta}};
}

CornerShape make_shape(const CornerSpec& spec, double W) {
  CornerShape shape;
  shape.spec = spec;
  shape.width = W;
  shape.vertices = corner_vertices(spec.beta, W);
  const auto& v = shape.vertices;
  const std::size_t n = v.size();
  shape.tangency.assign(n, 0.0);
  shape.tangency[0] = spec.delta;
  for (std::size_t i = 1; i < n; ++i) {
    const Vec2 prev = v[i - 1];
    const Vec2 next = v[(i + 1) % n];
    const double lin = norm(v[i] - prev);
    const double lout = norm(next - v[i]);
    const double tin = distance_outside_box(v[i], normalized(prev - v[i]), lin, spec.M);
    const double tout = distance_outside_box(v[i], normalized(next - v[i]), lout, spec.M);
    shape.tangency[i] = 0.5 * std::min({tin, tout, 0.5 * lin, 0.5 * lout});
  }
  std::vector<PieceRole> edges(n, PieceRole::closure_segment);
  std::vector<PieceRole> fillets(n, PieceRole::closure_fillet);
  edges.front() = PieceRole::lower_edge;
  edges.back() = PieceRole::upper_edge;
  fillets.front() = PieceRole::origin_fillet;
  shape.curve = rounded_polygon(v, shape.tangency, edges, fillets);
  shape.lower_piece = 0;
  shape.upper_piece = 2 * (n - 1);
  const double phi = kPi / 2.0 - std::atan(spec.beta);
  shape.origin_radius = spec.delta * std::tan(phi / 2.0);
  shape.lower_tangency = {spec.delta, 0.0};
  shape.upper_tangency = spec.delta / std::hypot(spec.beta, 1.0) * Vec2{spec.beta, 1.0};
  return shape;
}

}  // namespace

void CornerSpec::validate() const {
  require(std::isfinite(beta) && beta >= 0.0, ErrorKind::invalid_parameter, "beta must be >= 0");
  require(std::isfinite(M) && M > 0.0, ErrorKind::invalid_parameter, "M must be positive");
  require(std::isfinite(delta) && delta > 0.0 && delta <= M / 100.0, ErrorKind::invalid_parameter,
          "delta must satisfy 0 < delta <= M/100");
  require(target_area >= 0.0 && area() <= 100.0 * M * M, ErrorKind::invalid_parameter,
          "target_area must not exceed 100 M^2");
}

double CornerShape::lower_edge_position(double a) const {
  const double s = a - spec.delta;
  require(s > 0.0 && s < curve.piece(lower_piece).length, ErrorKind::invalid_parameter,
          "abscissa is not on the straight lower edge");
  return curve.piece_start(lower_piece) + s;
}

double CornerShape::upper_edge_position(double r) const {
  const double len = curve.piece(upper_piece).length;
  const double s = len - (r - spec.delta);
  require(r > spec.delta && s > 0.0, ErrorKind::invalid_parameter, "distance is not on the straight upper edge");
  return curve.piece_start(upper_piece) + s;
}

double SpacingField::operator()(Vec2 x) const {
  return std::min(max_spacing, min_spacing + growth * norm(x));
}

CornerShape corner_shape(const CornerSpec& spec) {
  spec.validate();
  const double target = spec.area();
  auto residual = [&](double e) { return make_shape(spec, spec.M + e).curve.area() - target; };
  const double e_lo = 1e-9 * spec.M;
  if (residual(e_lo) >= 0.0) {
    throw Error(ErrorKind::infeasible_area, "target area is below the area of the wedge inside the box");
  }
  double e_hi = spec.M;
  while (residual(e_hi) < 0.0) {
    e_hi *= 2.0;
    require(e_hi < 1e3 * spec.M, ErrorKind::infeasible_area, "no closure reaches the target area");
  }
  boost::uintmax_t iters = 200;
  const auto [a, b] = boost::math::tools::toms748_solve(residual, e_lo, e_hi,
                                                        boost::math::tools::eps_tolerance<double>(50), iters);
  return make_shape(spec, spec.M + 0.5 * (a + b));
}

Contour Contour::from_nodes(std::vector<Vec2> nodes) {
  Contour c;
  const std::size_t n = nodes.size();
  c.labels.resize(n);
  double total = 0.0;
  std::vector<double> cum(n);
  for (std::size_t i = 0; i < n; ++i) {
    cum[i] = total;
    total += norm(nodes[(i + 1) % n] - nodes[i]);
  }
  for (std::size_t i = 0; i < n; ++i) c.labels[i] = -kPi + 2.0 * kPi * cum[i] / total;
  c.ancestors = nodes;
  c.nodes = std::move(nodes);
  return c;
}

void Contour::validate() const {
  require(nodes.size() >= 16, ErrorKind::invalid_contour, "contour needs at least 16 nodes");
  require(labels.size() == nodes.size() && ancestors.size() == nodes.size(), ErrorKind::invalid_contour,
          "labels and ancestors must match the node count");
  require(signed_area(nodes) > 0.0, ErrorKind::invalid_contour, "contour must be counterclockwise");
  require(is_simple(nodes), ErrorKind::self_intersection, "contour is not simple");
}

Contour build_corner_patch(const CornerSpec& spec, double nodes_per_unit, const SamplingOptions& options) {
  spec.validate();
  require(nodes_per_unit > 0.0, ErrorKind::invalid_parameter, "nodes_per_unit must be positive");
  require(nodes_per_unit * spec.delta >= 8.0, ErrorKind::resolution_too_coarse,
          "the fillet needs nodes_per_unit * delta >= 8");
  const CornerShape shape = corner_shape(spec);
  const SpacingField field{1.0 / nodes_per_unit, options.growth, options.max_spacing_fraction * spec.M};
  std::vector<double> pins;
  for (std::size_t i = 0; i < shape.curve.piece_count(); ++i) pins.push_back(shape.curve.piece_start(i));
  for (double a : options.lower_pins) pins.push_back(shape.lower_edge_position(a));
  for (double r : options.upper_pins) pins.push_back(shape.upper_edge_position(r));
  const auto positions = sample_positions(shape.curve, field, pins);
  std::vector<Vec2> nodes;
  nodes.reserve(positions.size());
  for (double s : positions) nodes.push_back(shape.curve.point(s));
  Contour c = Contour::from_nodes(std::move(nodes));
  c.validate();
  return c;
}

namespace {

struct ConvexifyPlan {
  std::vector<CurvePiece> pieces;
  std::size_t adjust_a = 0;
  std::size_t adjust_b = 0;
  double origin_turn = 0.0;
  double far_turn = 0.0;
};

ConvexifyPlan plan_convexify(const CornerShape& base, double s_t, std::size_t split_piece) {
  const PiecewiseCurve& c = base.curve;
  const std::size_t n = c.piece_count();
  const double ds = s_t - c.piece_start(split_piece);
  ConvexifyPlan plan;
  std::vector<std::size_t> origin_index;
  CurvePiece first = c.piece(split_piece);
  first.start = c.point(s_t);
  first.length -= ds;
  plan.pieces.push_back(first);
  origin_index.push_back(split_piece);
  for (std::size_t k = 1; k < n; ++k) {
    const std::size_t i = (split_piece + k) % n;
    plan.pieces.push_back(c.piece(i));
    origin_index.push_back(i);
  }
  CurvePiece last = c.piece(split_piece);
  last.length = ds;
  plan.pieces.push_back(last);
  origin_index.push_back(split_piece);

  // Piece 2 of the corner shape is the vertical edge x = W; piece 4 is the top
  // edge for beta < 1 and the upper edge for the triangle.
  const std::size_t second = base.vertices.size() == 4 ? 4 : (split_piece == 0 ? 4 : 0);
  for (std::size_t k = 0; k < origin_index.size(); ++k) {
    if (origin_index[k] == 2) plan.adjust_a = k;
    if (origin_index[k] == second && origin_index[k] != split_piece) plan.adjust_b = k;
  }
  for (const CurvePiece& p : plan.pieces) {
    if (p.role == PieceRole::origin_fillet) plan.origin_turn += p.kappa0 * p.length;
    if (p.role == PieceRole::closure_fillet) plan.far_turn += p.kappa0 * p.length;
  }
  return plan;
}

PiecewiseCurve convexified_curve(const ConvexifyPlan& plan, double mu, double la, double lb) {
  std::vector<CurvePiece> pieces = plan.pieces;
  pieces[plan.adjust_a].length = la;
  pieces[plan.adjust_b].length = lb;
  double P = 0.0;
  for (const CurvePiece& p : pieces) P += p.length;
  const double sigma = (2.0 * kPi - plan.origin_turn - 0.5 * mu * P) / plan.far_turn;
  require(sigma > 0.05, ErrorKind::infeasible_epsilon, "curvature bump too large to close the curve");
  for (CurvePiece& p : pieces) {
    if (p.role == PieceRole::closure_fillet) p.kappa0 *= sigma;
  }
  return PiecewiseCurve(std::move(pieces), CurvatureBump{mu, P}, true);
}

/// Newton iteration on the two adjustable segment lengths so the curve closes.
PiecewiseCurve close_curve(const ConvexifyPlan& plan, double mu, double& la, double& lb, double scale) {
  const Vec2 p0 = plan.pieces.front().start;
  for (int it = 0; it < 30; ++it) {
    const PiecewiseCurve c = convexified_curve(plan, mu, la, lb);
    const Vec2 r = c.end_point() - p0;
    if (norm(r) < 1e-12 * scale) return c;
    const double h = 1e-6 * scale;
    const Vec2 ra = convexified_curve(plan, mu, la + h, lb).end_point() - p0;
    const Vec2 rb = convexified_curve(plan, mu, la, lb + h).end_point() - p0;
    const Vec2 ja = (ra - r) / h;
    const Vec2 jb = (rb - r) / h;
    const double det = cross(ja, jb);
    require(std::abs(det) > 1e-12, ErrorKind::infeasible_epsilon, "closure Jacobian is singular");
    la -= cross(r, jb) / det;
    lb -= cross(ja, r) / det;
    require(la > 0.0 && lb > 0.0, ErrorKind::infeasible_epsilon, "closure needs a negative segment length");
  }
  throw Error(ErrorKind::infeasible_epsilon, "closure iteration did not converge");
}

constexpr std::size_t kDense = 2048;

}  // namespace

ConvexifiedShape convexified_shape(const CornerShape& base, double epsilon, double tangency_a, Edge edge) {
  const CornerSpec& spec = base.spec;
  require(epsilon > 0.0, ErrorKind::invalid_parameter, "epsilon must be positive");
  require(tangency_a >= 2.0 * spec.delta && tangency_a <= spec.M / 2.0, ErrorKind::invalid_parameter,
          "tangency point must satisfy 2 delta <= a <= M/2");
  const double s_t =
      edge == Edge::lower ? base.lower_edge_position(tangency_a) : base.upper_edge_position(tangency_a);
  const std::size_t split = edge == Edge::lower ? base.lower_piece : base.upper_piece;
  const ConvexifyPlan plan = plan_convexify(base, s_t, split);
  const std::vector<Vec2> reference = base.curve.dense(kDense);
  const double scale = base.width;

  double la = plan.pieces[plan.adjust_a].length;
  double lb = plan.pieces[plan.adjust_b].length;
  // Newton restarts from the last closed curve; a bump that cannot be closed counts as too large.
  auto build = [&](double mu) -> std::optional<PiecewiseCurve> {
    double a = la;
    double b = lb;
    try {
      PiecewiseCurve c = close_curve(plan, mu, a, b, scale);
      la = a;
      lb = b;
      return c;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::infeasible_epsilon) throw;
      return std::nullopt;
    }
  };
  auto sym_diff = [&](const PiecewiseCurve& c) { return convex_symmetric_difference(c.dense(kDense), reference); };

  const double mu_max = 1.5 * (2.0 * kPi - plan.origin_turn - 0.25 * plan.far_turn) / base.curve.length();
  const double target = 0.5 * epsilon;
  ConvexifiedShape out;
  out.edge = edge;
  out.tangency = plan.pieces.front().start;
  const auto flat = build(0.0);
  require(flat.has_value(), ErrorKind::infeasible_epsilon, "the unbent curve does not close");
  require(sym_diff(*flat) < 0.25 * target, ErrorKind::infeasible_epsilon,
          "epsilon is below the sampling resolution of the symmetric difference");
  out.curve = *flat;
  out.mu = 0.0;
  if (const auto hi_curve = build(mu_max); hi_curve && sym_diff(*hi_curve) <= target) {
    out.curve = *hi_curve;
    out.mu = mu_max;
  } else {
    double lo = 0.0;
    double hi = mu_max;
    for (int it = 0; it < 40 && hi - lo > 1e-10 * mu_max; ++it) {
      const double mid = 0.5 * (lo + hi);
      const auto c = build(mid);
      if (c && sym_diff(*c) < target) {
        lo = mid;
        out.curve = *c;
        out.mu = mid;
      } else {
        hi = mid;
      }
    }
  }
  out.symmetric_difference = sym_diff(out.curve);
  require(out.mu > 0.0, ErrorKind::infeasible_epsilon, "no admissible curvature bump");
  return out;
}

Contour sample_convexified(const ConvexifiedShape& shape, const CornerSpec& spec, double nodes_per_unit,
                           const SamplingOptions& options) {
  require(nodes_per_unit * spec.delta >= 8.0, ErrorKind::resolution_too_coarse,
          "the fillet needs nodes_per_unit * delta >= 8");
  const SpacingField field{1.0 / nodes_per_unit, options.growth, options.max_spacing_fraction * spec.M};
  std::vector<double> pins;
  for (std::size_t i = 0; i < shape.curve.piece_count(); ++i) pins.push_back(shape.curve.piece_start(i));
  const auto positions = sample_positions(shape.curve, field, pins);
  std::vector<Vec2> nodes;
  nodes.reserve(positions.size());
  for (double s : positions) nodes.push_back(shape.curve.point(s));
  Contour c = Contour::from_nodes(std::move(nodes));
  c.validate();
  const ContourState st = frame(c);
  for (std::size_t i = 1; i < c.size(); ++i) {
    require(st.curvature[i] > 0.0, ErrorKind::infeasible_epsilon,
            "curvature bump is not resolved by the node spacing");
  }
  return c;
}

Contour build_convexified_patch(const CornerSpec& spec, double epsilon, double tangency_a, Edge edge,
                                double nodes_per_unit, const SamplingOptions& options) {
  const CornerShape base = corner_shape(spec);
  if (nodes_per_unit <= 0.0) nodes_per_unit = 16.0 / spec.delta;
  return sample_convexified(convexified_shape(base, epsilon, tangency_a, edge), spec, nodes_per_unit, options);
}

namespace {

/// Three-point derivative at the middle of (s-h1, s, s+h2).
template <class T>
T diff3(const T& fm, const T& f0, const T& fp, double h1, double h2) {
  return (-h2 / (h1 * (h1 + h2))) * fm + ((h2 - h1) / (h1 * h2)) * f0 + (h1 / (h2 * (h1 + h2))) * fp;
}

}  // namespace

ContourState frame(const Contour& contour, double time) {
  const std::size_t n = contour.size();
  require(n >= 3, ErrorKind::invalid_contour, "contour needs at least 3 nodes");
  ContourState st;
  st.contour = contour;
  st.time = time;
  std::vector<double> h(n);
  st.arc_length.resize(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    h[i] = norm(contour.nodes[(i + 1) % n] - contour.nodes[i]);
    require(h[i] > 0.0, ErrorKind::degenerate_nodes, "two consecutive nodes coincide");
    st.arc_length[i] = total;
    total += h[i];
  }
  st.perimeter = total;
  st.tangent.resize(n);
  st.normal.resize(n);
  st.curvature.resize(n);
  const auto& p = contour.nodes;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t im = (i + n - 1) % n;
    const std::size_t ip = (i + 1) % n;
    st.tangent[i] = normalized(diff3(p[im], p[i], p[ip], h[im], h[i]));
    st.normal[i] = {st.tangent[i].y, -st.tangent[i].x};
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t im = (i + n - 1) % n;
    const std::size_t ip = (i + 1) % n;
    const Vec2 dT = diff3(st.tangent[im], st.tangent[i], st.tangent[ip], h[im], h[i]);
    st.curvature[i] = -dot(dT, st.normal[i]);
  }
  return st;
}

std::vector<double> menger_curvature(const Contour& contour) {
  const std::size_t n = contour.size();
  const auto& p = contour.nodes;
  std::vector<double> k(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = p[(i + n - 1) % n];
    const Vec2 b = p[i];
    const Vec2 c = p[(i + 1) % n];
    const double den = norm(b - a) * norm(c - b) * norm(c - a);
    require(den > 0.0, ErrorKind::degenerate_nodes, "coincident nodes in curvature stencil");
    k[i] = 2.0 * cross(b - a, c - b) / den;
  }
  return k;
}

namespace {

/// Places nodes along the spline starting at parameter 0 so that consecutive
/// chords equal scale * step(previous node); returns the parameters reached.
std::vector<double> march(const ClosedCurveSpline& sp, const std::function<double(Vec2)>& step,
                          double scale, std::size_t count) {
  std::vector<double> taus(count + 1, 0.0);
  const double T = sp.period();
  for (std::size_t k = 1; k <= count; ++k) {
    const double t0 = taus[k - 1];
    const Vec2 p0 = sp(t0);
    const double c = scale * step(p0);
    auto d = [&](double t) { return norm(sp(t) - p0) - c; };
    double lo = t0;
    double hi = t0 + 1.25 * c;
    int guard = 0;
    while (d(hi) < 0.0) {
      lo = hi;
      hi += c;
      require(++guard < 64 && hi - t0 < T, ErrorKind::spacing_too_coarse, "chord march failed");
    }
    boost::uintmax_t iters = 100;
    const auto [a, b] =
        boost::math::tools::toms748_solve(d, lo, hi, boost::math::tools::eps_tolerance<double>(52), iters);
    taus[k] = 0.5 * (a + b);
  }
  return taus;
}

Contour resample_with(const Contour& contour, const std::function<double(Vec2)>& step, std::size_t count) {
  const ClosedCurveSpline sp(contour.nodes);
  const ClosedCurveSpline anc(contour.ancestors);
  const double T = sp.period();
  auto overshoot = [&](double scale) { return march(sp, step, scale, count).back() - T; };
  double lo = 0.9;
  double hi = 1.1;
  while (overshoot(lo) > 0.0) lo *= 0.8;
  while (overshoot(hi) < 0.0) hi *= 1.25;
  boost::uintmax_t iters = 200;
  const auto [a, b] = boost::math::tools::toms748_solve(overshoot, lo, hi,
                                                        boost::math::tools::eps_tolerance<double>(52), iters);
  const auto taus = march(sp, step, 0.5 * (a + b), count);
  std::vector<Vec2> nodes(count);
  std::vector<Vec2> ancestors(count);
  const auto& knots = sp.knots();
  const auto& aknots = anc.knots();
  for (std::size_t k = 0; k < count; ++k) {
    nodes[k] = sp(taus[k]);
    // Map the node parameter to the ancestor spline through the shared knot index.
    const double t = std::fmod(taus[k], T);
    const auto it = std::upper_bound(knots.begin(), knots.end(), t);
    const std::size_t i = static_cast<std::size_t>(it - knots.begin()) - 1;
    const double t1 = i + 1 < knots.size() ? knots[i + 1] : T;
    const double a1 = i + 1 < aknots.size() ? aknots[i + 1] : anc.period();
    const double w = (t - knots[i]) / (t1 - knots[i]);
    ancestors[k] = anc(aknots[i] + w * (a1 - aknots[i]));
  }
  Contour out = Contour::from_nodes(std::move(nodes));
  out.ancestors = std::move(ancestors);
  return out;
}

}  // namespace

Contour resample(const Contour& contour, double target_spacing) {
  const double P = perimeter(contour.nodes);
  require(target_spacing > 0.0 && target_spacing < P / 16.0, ErrorKind::spacing_too_coarse,
          "target spacing must lie in (0, perimeter/16)");
  const auto count = static_cast<std::size_t>(std::max(16L, std::lround(P / target_spacing)));
  return resample_with(contour, [](Vec2) { return 1.0; }, count) ;
}

Contour resample_graded(const Contour& contour, const std::function<double(Vec2)>& spacing) {
  double phi = 0.0;
  const std::size_t n = contour.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = contour.nodes[i];
    const Vec2 b = contour.nodes[(i + 1) % n];
    phi += norm(b - a) / spacing(0.5 * (a + b));
  }
  require(phi >= 16.0, ErrorKind::spacing_too_coarse, "spacing field yields fewer than 16 nodes");
  return resample_with(contour, spacing, static_cast<std::size_t>(std::lround(phi)));
}

double signed_area(const std::vector<Vec2>& p) {
  double a = 0.0;
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) a += cross(p[i], p[(i + 1) % n]);
  return 0.5 * a;
}

double perimeter(const std::vector<Vec2>& p) {
  double total = 0.0;
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) total += norm(p[(i + 1) % n] - p[i]);
  return total;
}

namespace {

int orient(Vec2 a, Vec2 b, Vec2 c) {
  const double v = cross(b - a, c - a);
  return (v > 0.0) - (v < 0.0);
}

bool on_segment(Vec2 a, Vec2 b, Vec2 p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  const int o1 = orient(a, b, c);
  const int o2 = orient(a, b, d);
  const int o3 = orient(c, d, a);
  const int o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

}  // namespace

bool is_simple(const std::vector<Vec2>& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  auto xmin = [&](std::size_t i) { return std::min(p[i].x, p[(i + 1) % n].x); };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return xmin(a) < xmin(b); });
  for (std::size_t u = 0; u < n; ++u) {
    const std::size_t i = order[u];
    const Vec2 a = p[i];
    const Vec2 b = p[(i + 1) % n];
    const double xmax = std::max(a.x, b.x);
    const double ylo = std::min(a.y, b.y);
    const double yhi = std::max(a.y, b.y);
    for (std::size_t w = u + 1; w < n; ++w) {
      const std::size_t j = order[w];
      if (xmin(j) > xmax) break;
      if (j == (i + 1) % n || i == (j + 1) % n) continue;
      const Vec2 c = p[j];
      const Vec2 d = p[(j + 1) % n];
      if (std::max(c.y, d.y) < ylo || std::min(c.y, d.y) > yhi) continue;
      if (segments_intersect(a, b, c, d)) return false;
    }
  }
  return true;
}

bool point_in_polygon(const std::vector<Vec2>& p, Vec2 q) {
  bool inside = false;
  const std::size_t n = p.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    if ((p[i].y > q.y) != (p[j].y > q.y)) {
      const double x = p[j].x + (q.y - p[j].y) * (p[i].x - p[j].x) / (p[i].y - p[j].y);
      if (q.x < x) inside = !inside;
    }
  }
  return inside;
}

std::vector<Vec2> convex_clip(const std::vector<Vec2>& subject, const std::vector<Vec2>& clip) {
  std::vector<Vec2> out = subject;
  std::vector<Vec2> in;
  const std::size_t m = clip.size();
  for (std::size_t e = 0; e < m && !out.empty(); ++e) {
    const Vec2 a = clip[e];
    const Vec2 b = clip[(e + 1) % m];
    in.swap(out);
    out.clear();
    const std::size_t k = in.size();
    for (std::size_t i = 0; i < k; ++i) {
      const Vec2 p = in[i];
      const Vec2 q = in[(i + 1) % k];
      const double sp = cross(b - a, p - a);
      const double sq = cross(b - a, q - a);
      if (sp >= 0.0) out.push_back(p);
      if ((sp >= 0.0) != (sq >= 0.0)) out.push_back(p + (sp / (sp - sq)) * (q - p));
    }
  }
  return out;
}

double convex_symmetric_difference(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
  return signed_area(a) + signed_area(b) - 2.0 * signed_area(convex_clip(a, b));
}

}  // namespace gsqg
