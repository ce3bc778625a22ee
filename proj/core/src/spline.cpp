#include "gsqg/spline.hpp"

#include <algorithm>
#include <cmath>

#include "gsqg/error.hpp"

namespace gsqg {

namespace {

/// Solves the periodic tridiagonal system
///   sub[i] x[i-1] + diag[i] x[i] + sup[i] x[i+1] = rhs[i]  (indices mod n)
/// by Sherman-Morrison on top of the Thomas algorithm.
std::vector<double> solve_cyclic(std::vector<double> sub, std::vector<double> diag, std::vector<double> sup,
                                 const std::vector<double>& rhs) {
  const std::size_t n = diag.size();
  const double alpha = sup[n - 1];
  const double beta = sub[0];
  const double gamma = -diag[0];
  diag[0] -= gamma;
  diag[n - 1] -= alpha * beta / gamma;

  auto thomas = [&](const std::vector<double>& r) {
    std::vector<double> c(n), x(n);
    double b = diag[0];
    x[0] = r[0] / b;
    for (std::size_t i = 1; i < n; ++i) {
      c[i] = sup[i - 1] / b;
      b = diag[i] - sub[i] * c[i];
      x[i] = (r[i] - sub[i] * x[i - 1]) / b;
    }
    for (std::size_t i = n - 1; i-- > 0;) x[i] -= c[i + 1] * x[i + 1];
    return x;
  };

  std::vector<double> u(n, 0.0);
  u[0] = gamma;
  u[n - 1] = alpha;
  const std::vector<double> x = thomas(rhs);
  const std::vector<double> z = thomas(u);
  const double fact = (x[0] + beta * x[n - 1] / gamma) / (1.0 + z[0] + beta * z[n - 1] / gamma);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] - fact * z[i];
  return out;
}

}  // namespace

PeriodicSpline::PeriodicSpline(std::vector<double> knots, double period, std::vector<double> values)
    : t_(std::move(knots)), y_(std::move(values)), period_(period) {
  const std::size_t n = t_.size();
  require(n >= 3 && y_.size() == n, ErrorKind::invalid_parameter, "spline needs >= 3 matching knots");
  require(period_ > t_.back() - t_.front(), ErrorKind::invalid_parameter, "period too short");
  std::vector<double> h(n);
  for (std::size_t i = 0; i < n; ++i) {
    h[i] = (i + 1 < n ? t_[i + 1] : t_[0] + period_) - t_[i];
    require(h[i] > 0.0, ErrorKind::degenerate_nodes, "spline knots must be strictly increasing");
  }
  std::vector<double> sub(n), diag(n), sup(n), rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t ip = (i + 1) % n;
    const std::size_t im = (i + n - 1) % n;
    sub[i] = h[im];
    diag[i] = 2.0 * (h[im] + h[i]);
    sup[i] = h[i];
    rhs[i] = 6.0 * ((y_[ip] - y_[i]) / h[i] - (y_[i] - y_[im]) / h[im]);
  }
  m_ = solve_cyclic(sub, diag, sup, rhs);
}

std::size_t PeriodicSpline::locate(double& t) const {
  t = t_[0] + std::fmod(t - t_[0], period_);
  if (t < t_[0]) t += period_;
  const auto it = std::upper_bound(t_.begin(), t_.end(), t);
  return static_cast<std::size_t>(it - t_.begin()) - 1;
}

double PeriodicSpline::operator()(double t) const {
  const std::size_t i = locate(t);
  const std::size_t j = (i + 1) % t_.size();
  const double t1 = i + 1 < t_.size() ? t_[i + 1] : t_[0] + period_;
  const double h = t1 - t_[i];
  const double a = t1 - t;
  const double b = t - t_[i];
  return m_[i] * a * a * a / (6.0 * h) + m_[j] * b * b * b / (6.0 * h) +
         (y_[i] / h - m_[i] * h / 6.0) * a + (y_[j] / h - m_[j] * h / 6.0) * b;
}

double PeriodicSpline::derivative(double t) const {
  const std::size_t i = locate(t);
  const std::size_t j = (i + 1) % t_.size();
  const double t1 = i + 1 < t_.size() ? t_[i + 1] : t_[0] + period_;
  const double h = t1 - t_[i];
  const double a = t1 - t;
  const double b = t - t_[i];
  return -m_[i] * a * a / (2.0 * h) + m_[j] * b * b / (2.0 * h) - (y_[i] / h - m_[i] * h / 6.0) +
         (y_[j] / h - m_[j] * h / 6.0);
}

namespace {

std::vector<double> chord_knots(const std::vector<Vec2>& p, double& total) {
  std::vector<double> t(p.size());
  total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    t[i] = total;
    total += norm(p[(i + 1) % p.size()] - p[i]);
  }
  return t;
}

std::vector<double> coord(const std::vector<Vec2>& p, bool x) {
  std::vector<double> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = x ? p[i].x : p[i].y;
  return out;
}

double chord_total(const std::vector<Vec2>& p) {
  double total = 0.0;
  chord_knots(p, total);
  return total;
}

}  // namespace

ClosedCurveSpline::ClosedCurveSpline(const std::vector<Vec2>& points)
    : knots_([&] {
        double total = 0.0;
        return chord_knots(points, total);
      }()),
      x_(knots_, chord_total(points), coord(points, true)),
      y_(knots_, chord_total(points), coord(points, false)) {}

}  // namespace gsqg
