#include "gsqg_cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "gsqg/error.hpp"

namespace gsqg::cli {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 160.0;
constexpr double kTop = 20.0;
constexpr double kBottom = 50.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", std::abs(v) < 1e-12 ? 0.0 : v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

double nice_step(double span) {
  const double raw = span / 6.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0}) {
    if (m * mag >= raw) return m * mag;
  }
  return 10.0 * mag;
}

}  // namespace

std::string ramp_color(double u) {
  u = std::clamp(u, 0.0, 1.0);
  const int r = static_cast<int>(std::lround(30 + 200 * u));
  const int g = static_cast<int>(std::lround(60 + 40 * (1.0 - std::abs(2.0 * u - 1.0))));
  const int b = static_cast<int>(std::lround(230 - 200 * u));
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

std::string line_plot_svg(const std::vector<Series>& series, const std::string& x_label, const std::string& y_label) {
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const Series& s : series) {
    for (double v : s.x) x0 = std::min(x0, v), x1 = std::max(x1, v);
    for (double v : s.y) y0 = std::min(y0, v), y1 = std::max(y1, v);
  }
  if (!(x1 > x0)) x0 -= 0.5, x1 += 0.5;
  if (!(y1 > y0)) y0 -= 0.5, y1 += 0.5;
  const double pad = 0.05 * (y1 - y0);
  y0 -= pad;
  y1 += pad;
  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * pw; };
  auto py = [&](double y) { return kTop + (y1 - y) / (y1 - y0) * ph; };

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
    << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
    << "\" fill=\"none\" stroke=\"black\"/>\n";
  const double xs = nice_step(x1 - x0);
  for (double x = std::ceil(x0 / xs) * xs; x <= x1 + 1e-9 * xs; x += xs) {
    o << "<line x1=\"" << fmt(px(x)) << "\" y1=\"" << fmt(kTop + ph) << "\" x2=\"" << fmt(px(x)) << "\" y2=\""
      << fmt(kTop + ph + 5) << "\" stroke=\"black\"/>\n"
      << "<text x=\"" << fmt(px(x)) << "\" y=\"" << fmt(kTop + ph + 20)
      << "\" font-size=\"12\" text-anchor=\"middle\">" << tick(x) << "</text>\n";
  }
  const double ys = nice_step(y1 - y0);
  for (double y = std::ceil(y0 / ys) * ys; y <= y1 + 1e-9 * ys; y += ys) {
    o << "<line x1=\"" << fmt(kLeft - 5) << "\" y1=\"" << fmt(py(y)) << "\" x2=\"" << fmt(kLeft) << "\" y2=\""
      << fmt(py(y)) << "\" stroke=\"black\"/>\n"
      << "<text x=\"" << fmt(kLeft - 8) << "\" y=\"" << fmt(py(y) + 4)
      << "\" font-size=\"12\" text-anchor=\"end\">" << tick(y) << "</text>\n";
  }
  if (y0 < 0.0 && y1 > 0.0) {
    o << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(py(0)) << "\" x2=\"" << fmt(kLeft + pw) << "\" y2=\""
      << fmt(py(0)) << "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
  }
  o << "<text x=\"" << fmt(kLeft + pw / 2) << "\" y=\"" << fmt(kHeight - 10)
    << "\" font-size=\"14\" text-anchor=\"middle\">" << escape(x_label) << "</text>\n"
    << "<text x=\"16\" y=\"" << fmt(kTop + ph / 2) << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
    << fmt(kTop + ph / 2) << ")\">" << escape(y_label) << "</text>\n";
  for (std::size_t k = 0; k < series.size(); ++k) {
    const Series& s = series[k];
    const char* color = kPalette[k % std::size(kPalette)];
    o << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      o << (i ? " " : "") << fmt(px(s.x[i])) << ',' << fmt(py(s.y[i]));
    }
    o << "\"/>\n";
    const double ly = kTop + 20 + 20.0 * static_cast<double>(k);
    o << "<line x1=\"" << fmt(kLeft + pw + 15) << "\" y1=\"" << fmt(ly) << "\" x2=\"" << fmt(kLeft + pw + 40)
      << "\" y2=\"" << fmt(ly) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n"
      << "<text x=\"" << fmt(kLeft + pw + 46) << "\" y=\"" << fmt(ly + 4) << "\" font-size=\"12\">"
      << escape(s.label) << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

std::string contour_svg(const std::vector<ContourStroke>& strokes, double half_width, const std::string& caption) {
  constexpr double size = 600.0;
  auto px = [&](double x) { return (x + half_width) / (2.0 * half_width) * size; };
  auto py = [&](double y) { return (half_width - y) / (2.0 * half_width) * size; };
  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size + 30
    << "\" viewBox=\"0 0 " << size << ' ' << size + 30 << "\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << "<line x1=\"0\" y1=\"" << fmt(py(0)) << "\" x2=\"" << size << "\" y2=\"" << fmt(py(0))
    << "\" stroke=\"#ccc\"/>\n"
    << "<line x1=\"" << fmt(px(0)) << "\" y1=\"0\" x2=\"" << fmt(px(0)) << "\" y2=\"" << size
    << "\" stroke=\"#ccc\"/>\n";
  for (const ContourStroke& s : strokes) {
    o << "<polygon fill=\"none\" stroke=\"" << s.color << "\" stroke-opacity=\"" << s.opacity
      << "\" stroke-width=\"" << s.width << "\" points=\"";
    for (std::size_t i = 0; i < s.nodes.size(); ++i) {
      o << (i ? " " : "") << fmt(px(s.nodes[i].x)) << ',' << fmt(py(s.nodes[i].y));
    }
    o << "\"/>\n";
  }
  o << "<text x=\"10\" y=\"" << size + 20 << "\" font-size=\"14\">" << escape(caption) << "</text>\n</svg>\n";
  return o.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::io_error, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorKind::io_error, "write failed for " + path);
}

}  // namespace gsqg::cli
