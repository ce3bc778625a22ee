#include "gsqg/shape.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>

#include "gsqg/error.hpp"

namespace gsqg {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

using Gauss = boost::math::quadrature::gauss<double, 20>;

double bump_primitive(const CurvatureBump& b, double s) {
  return s / 2.0 - b.period * std::sin(kTwoPi * s / b.period) / (2.0 * kTwoPi);
}

Vec2 arc_center(const CurvePiece& p) {
  return p.start + (1.0 / p.kappa0) * Vec2{-std::sin(p.theta0), std::cos(p.theta0)};
}

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  return a < 0.0 ? a + kTwoPi : a;
}

/// True when the polar angle phi of a point on the arc's circle lies on the arc.
bool on_arc(const CurvePiece& p, double phi, double tol = 1e-12) {
  const double phi0 = p.theta0 - std::numbers::pi / 2.0;
  const double sweep = p.kappa0 * p.length;
  const double d = wrap_angle(phi - phi0);
  return d <= sweep + tol || d >= kTwoPi - tol;
}

}  // namespace

PiecewiseCurve::PiecewiseCurve(std::vector<CurvePiece> pieces, CurvatureBump bump, bool chain)
    : pieces_(std::move(pieces)), bump_(bump) {
  chain = chain || !exact();
  require(!pieces_.empty(), ErrorKind::invalid_contour, "curve needs at least one piece");
  require(bump_.period > 0.0, ErrorKind::invalid_parameter, "bump period must be positive");
  offsets_.resize(pieces_.size());
  panels_.resize(pieces_.size());
  double s = 0.0;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    require(pieces_[i].length >= 0.0, ErrorKind::invalid_contour, "negative piece length");
    offsets_[i] = s;
    if (i > 0 && chain) {
      pieces_[i].start = local_point(i - 1, pieces_[i - 1].length);
      pieces_[i].theta0 = local_angle(i - 1, pieces_[i - 1].length);
    }
    if (!exact()) {
      const CurvePiece& p = pieces_[i];
      double max_len = bump_.period / 1000.0;
      if (p.kappa0 > 0.0) max_len = std::min(max_len, 0.5 / p.kappa0);
      const auto n = static_cast<std::size_t>(std::max(1.0, std::ceil(p.length / max_len)));
      const double h = p.length / static_cast<double>(n);
      Vec2 q = p.start;
      panels_[i].reserve(n);
      for (std::size_t j = 0; j < n; ++j) {
        panels_[i].push_back({h * static_cast<double>(j), q});
        q = integrate_panel(i, h * static_cast<double>(j), h * static_cast<double>(j + 1), q);
      }
    }
    s += pieces_[i].length;
  }
  length_ = s;
  end_ = local_point(pieces_.size() - 1, pieces_.back().length);
}

double PiecewiseCurve::local_angle(std::size_t i, double ds) const {
  const CurvePiece& p = pieces_[i];
  double a = p.theta0 + p.kappa0 * ds;
  if (!exact()) {
    a += bump_.mu * (bump_primitive(bump_, offsets_[i] + ds) - bump_primitive(bump_, offsets_[i]));
  }
  return a;
}

Vec2 PiecewiseCurve::integrate_panel(std::size_t i, double ds0, double ds1, Vec2 p0) const {
  if (ds1 <= ds0) return p0;
  const double cx = Gauss::integrate([&](double t) { return std::cos(local_angle(i, t)); }, ds0, ds1);
  const double cy = Gauss::integrate([&](double t) { return std::sin(local_angle(i, t)); }, ds0, ds1);
  return p0 + Vec2{cx, cy};
}

Vec2 PiecewiseCurve::local_point(std::size_t i, double ds) const {
  const CurvePiece& p = pieces_[i];
  if (exact()) {
    if (p.kappa0 == 0.0) return p.start + ds * Vec2{std::cos(p.theta0), std::sin(p.theta0)};
    const double a = p.theta0 + p.kappa0 * ds;
    const double r = 1.0 / p.kappa0;
    return p.start + r * Vec2{std::sin(a) - std::sin(p.theta0), std::cos(p.theta0) - std::cos(a)};
  }
  const auto& panels = panels_[i];
  if (panels.empty()) return integrate_panel(i, 0.0, ds, p.start);
  const double h = p.length / static_cast<double>(panels.size());
  auto j = static_cast<std::size_t>(std::max(0.0, std::floor(ds / h)));
  j = std::min(j, panels.size() - 1);
  return integrate_panel(i, panels[j].s0, ds, panels[j].p0);
}

std::size_t PiecewiseCurve::piece_index(double s) const {
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), s);
  return it == offsets_.begin() ? 0 : static_cast<std::size_t>(it - offsets_.begin()) - 1;
}

namespace {
double wrap_s(double s, double length) {
  if (s >= 0.0 && s < length) return s;
  s = std::fmod(s, length);
  return s < 0.0 ? s + length : s;
}
}  // namespace

Vec2 PiecewiseCurve::point(double s) const {
  s = wrap_s(s, length_);
  const std::size_t i = piece_index(s);
  return local_point(i, std::min(s - offsets_[i], pieces_[i].length));
}

double PiecewiseCurve::angle(double s) const {
  s = wrap_s(s, length_);
  const std::size_t i = piece_index(s);
  return local_angle(i, s - offsets_[i]);
}

Vec2 PiecewiseCurve::tangent(double s) const {
  const double a = angle(s);
  return {std::cos(a), std::sin(a)};
}

double PiecewiseCurve::curvature(double s) const {
  s = wrap_s(s, length_);
  const std::size_t i = piece_index(s);
  const double b = std::sin(std::numbers::pi * s / bump_.period);
  return pieces_[i].kappa0 + bump_.mu * b * b;
}

double PiecewiseCurve::end_angle() const {
  return local_angle(pieces_.size() - 1, pieces_.back().length);
}

double PiecewiseCurve::area() const {
  double total = 0.0;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const CurvePiece& p = pieces_[i];
    const double turn = p.kappa0 * p.length + std::abs(bump_.mu) * p.length;
    const auto n = static_cast<std::size_t>(
        std::max({1.0, std::ceil(turn / 0.25), exact() ? 1.0 : std::ceil(p.length / (bump_.period / 200.0))}));
    const double h = p.length / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
      total += Gauss::integrate(
          [&](double t) {
            const Vec2 q = local_point(i, t);
            const double a = local_angle(i, t);
            return 0.5 * (q.x * std::sin(a) - q.y * std::cos(a));
          },
          h * static_cast<double>(j), h * static_cast<double>(j + 1));
    }
  }
  return total;
}

std::vector<Vec2> PiecewiseCurve::dense(std::size_t count) const {
  std::vector<Vec2> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(point(length_ * static_cast<double>(k) / static_cast<double>(count)));
  }
  return out;
}

std::optional<HorizontalChord> PiecewiseCurve::horizontal_chord(double y) const {
  require(exact(), ErrorKind::invalid_parameter, "horizontal_chord needs an exact curve");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  auto take = [&](double x) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  };
  for (const CurvePiece& p : pieces_) {
    if (p.kappa0 == 0.0) {
      const Vec2 e{std::cos(p.theta0), std::sin(p.theta0)};
      const Vec2 q1 = p.start + p.length * e;
      const double ylo = std::min(p.start.y, q1.y);
      const double yhi = std::max(p.start.y, q1.y);
      if (y < ylo || y > yhi) continue;
      if (std::abs(e.y) < 1e-15) {
        take(p.start.x);
        take(q1.x);
      } else {
        const double t = std::clamp((y - p.start.y) / e.y, 0.0, p.length);
        take(p.start.x + t * e.x);
      }
    } else {
      const Vec2 c = arc_center(p);
      const double r = 1.0 / p.kappa0;
      const double dy = y - c.y;
      if (std::abs(dy) > r) continue;
      const double dx = std::sqrt(std::max(0.0, r * r - dy * dy));
      if (on_arc(p, std::atan2(dy, dx))) take(c.x + dx);
      if (on_arc(p, std::atan2(dy, -dx))) take(c.x - dx);
    }
  }
  if (!(lo <= hi)) return std::nullopt;
  return HorizontalChord{lo, hi};
}

double PiecewiseCurve::ray_exit(Vec2 p, Vec2 d, double t_min) const {
  require(exact(), ErrorKind::invalid_parameter, "ray_exit needs an exact curve");
  double best = -1.0;
  for (const CurvePiece& q : pieces_) {
    if (q.kappa0 == 0.0) {
      const Vec2 e{std::cos(q.theta0), std::sin(q.theta0)};
      const double den = cross(d, e);
      if (std::abs(den) < 1e-300) continue;
      const Vec2 w = q.start - p;
      const double t = cross(w, e) / den;
      const double u = cross(w, d) / den;
      if (u >= -1e-12 * q.length && u <= q.length * (1.0 + 1e-12) && t > t_min) best = std::max(best, t);
    } else {
      const Vec2 c = arc_center(q);
      const double r = 1.0 / q.kappa0;
      const Vec2 w = p - c;
      const double bq = dot(w, d);
      const double cq = dot(w, w) - r * r;
      const double disc = bq * bq - cq;
      if (disc < 0.0) continue;
      const double sq = std::sqrt(disc);
      for (double t : {-bq - sq, -bq + sq}) {
        if (t <= t_min) continue;
        const Vec2 x = w + t * d;
        if (on_arc(q, std::atan2(x.y, x.x), 1e-10)) best = std::max(best, t);
      }
    }
  }
  return best;
}

std::vector<double> PiecewiseCurve::y_breakpoints() const {
  std::vector<double> ys;
  for (const CurvePiece& p : pieces_) {
    ys.push_back(p.start.y);
    if (p.kappa0 > 0.0) {
      const Vec2 c = arc_center(p);
      const double r = 1.0 / p.kappa0;
      if (on_arc(p, std::numbers::pi / 2.0, 0.0)) ys.push_back(c.y + r);
      if (on_arc(p, -std::numbers::pi / 2.0, 0.0)) ys.push_back(c.y - r);
    }
  }
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  return ys;
}

double PiecewiseCurve::min_y() const { return y_breakpoints().front(); }
double PiecewiseCurve::max_y() const { return y_breakpoints().back(); }

PiecewiseCurve rounded_polygon(const std::vector<Vec2>& v, const std::vector<double>& tangency,
                               const std::vector<PieceRole>& edge_roles,
                               const std::vector<PieceRole>& fillet_roles) {
  const std::size_t n = v.size();
  require(n >= 3 && tangency.size() == n && edge_roles.size() == n && fillet_roles.size() == n,
          ErrorKind::invalid_parameter, "rounded_polygon: inconsistent input sizes");
  std::vector<Vec2> dir(n);
  for (std::size_t i = 0; i < n; ++i) dir[i] = normalized(v[(i + 1) % n] - v[i]);
  std::vector<CurvePiece> pieces;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    const Vec2 a = v[i] + tangency[i] * dir[i];
    const Vec2 b = v[j] - tangency[j] * dir[i];
    const double seg = dot(b - a, dir[i]);
    require(seg >= -1e-12, ErrorKind::invalid_contour, "fillets overlap along an edge");
    const double theta = std::atan2(dir[i].y, dir[i].x);
    pieces.push_back({a, theta, std::max(0.0, seg), 0.0, edge_roles[i]});
    const double turn = std::atan2(cross(dir[i], dir[j]), dot(dir[i], dir[j]));
    require(turn > 0.0, ErrorKind::invalid_contour, "polygon must be strictly convex");
    if (tangency[j] > 0.0) {
      const double kappa = std::tan(turn / 2.0) / tangency[j];
      pieces.push_back({b, theta, turn / kappa, kappa, fillet_roles[j]});
    }
  }
  return PiecewiseCurve(pieces);
}

std::vector<double> sample_positions(const PiecewiseCurve& curve,
                                     const std::function<double(Vec2)>& spacing,
                                     std::vector<double> pins) {
  const double L = curve.length();
  for (double& p : pins) p = wrap_s(p, L);
  pins.push_back(0.0);
  std::sort(pins.begin(), pins.end());
  std::vector<double> knots;
  for (double p : pins) {
    if (knots.empty() || p - knots.back() > 1e-12 * L) knots.push_back(p);
  }
  if (L - knots.back() <= 1e-12 * L) knots.pop_back();

  std::vector<double> out;
  std::vector<double> ts;
  std::vector<double> phis;
  for (std::size_t k = 0; k < knots.size(); ++k) {
    const double a = knots[k];
    const double b = k + 1 < knots.size() ? knots[k + 1] : L;
    ts.assign(1, a);
    phis.assign(1, 0.0);
    double s = a;
    double phi = 0.0;
    while (s < b) {
      const double h0 = spacing(curve.point(s));
      require(h0 > 0.0, ErrorKind::invalid_parameter, "spacing must be positive");
      const double step = std::min(0.25 * h0, b - s);
      const double hm = spacing(curve.point(s + 0.5 * step));
      phi += step / hm;
      s = (b - s - step <= 1e-14 * L) ? b : s + step;
      ts.push_back(s);
      phis.push_back(phi);
    }
    out.push_back(a);
    const long n = std::max(1L, std::lround(phi));
    std::size_t idx = 1;
    for (long j = 1; j < n; ++j) {
      const double target = phi * static_cast<double>(j) / static_cast<double>(n);
      while (phis[idx] < target) ++idx;
      const double w = (target - phis[idx - 1]) / (phis[idx] - phis[idx - 1]);
      out.push_back(ts[idx - 1] + w * (ts[idx] - ts[idx - 1]));
    }
  }
  return out;
}

}  // namespace gsqg
