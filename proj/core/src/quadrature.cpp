#include "gsqg/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace gsqg::quad {

namespace {

std::vector<double> panel_edges(double a, double b, std::span<const double> breaks) {
  std::vector<double> edges{a};
  for (double x : breaks) {
    if (x > a && x < b) edges.push_back(x);
  }
  edges.push_back(b);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

boost::math::quadrature::tanh_sinh<double>& tanh_sinh_rule() {
  thread_local boost::math::quadrature::tanh_sinh<double> rule;
  return rule;
}

}  // namespace

Result adaptive(const Integrand& f, double a, double b, double tol, unsigned max_depth) {
  if (a == b) return {};
  Result r;
  r.value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, max_depth, tol,
                                                                          &r.error);
  return r;
}

Result adaptive_with_breaks(const Integrand& f, double a, double b, std::span<const double> breaks,
                            double tol, unsigned max_depth) {
  const auto edges = panel_edges(a, b, breaks);
  Result total;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const Result r = adaptive(f, edges[i], edges[i + 1], tol, max_depth);
    total.value += r.value;
    total.error += r.error;
  }
  return total;
}

Result endpoint_singular(const Integrand& f, double a, double b, double tol) {
  if (a == b) return {};
  Result r;
  double l1 = 0.0;
  r.value = tanh_sinh_rule().integrate([&f](double x) { return f(x); }, a, b, tol, &r.error, &l1);
  r.error *= l1;
  return r;
}

Result endpoint_singular_with_breaks(const Integrand& f, double a, double b,
                                     std::span<const double> breaks, double tol) {
  const auto edges = panel_edges(a, b, breaks);
  Result total;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const Result r = endpoint_singular(f, edges[i], edges[i + 1], tol);
    total.value += r.value;
    total.error += r.error;
  }
  return total;
}

}  // namespace gsqg::quad
