#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "gsqg/geometry.hpp"

namespace gsqg::test {

inline Contour ellipse(std::size_t n, double a, double b, Vec2 center = {}) {
  std::vector<Vec2> nodes(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = -std::numbers::pi + 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    nodes[i] = {center.x + a * std::cos(t), center.y + b * std::sin(t)};
  }
  return Contour::from_nodes(std::move(nodes));
}

inline Contour circle(std::size_t n, double r = 1.0) { return ellipse(n, r, r); }

/// Ellipse with nodes at equal arc-length spacing.
inline Contour uniform_ellipse(std::size_t n, double a, double b) {
  const Contour c = ellipse(4 * n, a, b);
  return resample(c, perimeter(c.nodes) / static_cast<double>(n));
}

}  // namespace gsqg::test
