#pragma once

#include <vector>

#include "gsqg/vec2.hpp"

namespace gsqg {

/// Periodic cubic interpolating spline on knots 0 = t_0 < ... < t_{n-1} < period.
class PeriodicSpline {
 public:
  PeriodicSpline(std::vector<double> knots, double period, std::vector<double> values);

  double operator()(double t) const;
  double derivative(double t) const;
  double period() const { return period_; }

 private:
  std::size_t locate(double& t) const;

  std::vector<double> t_;
  std::vector<double> y_;
  std::vector<double> m_;
  double period_;
};

/// Closed planar curve through the given points, parametrized by cumulative chord length.
class ClosedCurveSpline {
 public:
  explicit ClosedCurveSpline(const std::vector<Vec2>& points);

  Vec2 operator()(double t) const { return {x_(t), y_(t)}; }
  Vec2 derivative(double t) const { return {x_.derivative(t), y_.derivative(t)}; }
  double period() const { return x_.period(); }
  /// Parameter value of input point k.
  const std::vector<double>& knots() const { return knots_; }

 private:
  std::vector<double> knots_;
  PeriodicSpline x_;
  PeriodicSpline y_;
};

}  // namespace gsqg
