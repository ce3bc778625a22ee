#pragma once

#include <string>
#include <vector>

#include "gsqg/vec2.hpp"

namespace gsqg::cli {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

/// Line plot with axes, ticks and a legend; one polyline per series.
std::string line_plot_svg(const std::vector<Series>& series, const std::string& x_label, const std::string& y_label);

struct ContourStroke {
  std::vector<Vec2> nodes;
  std::string color;
  double opacity = 1.0;
  double width = 1.0;
};

/// Closed contours on the fixed viewport [-half_width, half_width]^2.
std::string contour_svg(const std::vector<ContourStroke>& strokes, double half_width, const std::string& caption);

/// Color ramp from blue (u = 0) to red (u = 1) as #rrggbb.
std::string ramp_color(double u);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace gsqg::cli
