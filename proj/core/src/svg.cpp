#include "modesplit/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "modesplit/csv.hpp"

namespace modesplit::svg {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 150.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;

constexpr std::array<const char*, 6> kColors{"#1f77b4", "#d62728", "#2ca02c",
                                             "#9467bd", "#ff7f0e", "#17becf"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Fixed short formatting for tick labels.
std::string tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

void write_line_plot(std::ostream& os, const LinePlot& plot) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const Series& s : plot.series) {
    for (double x : s.x) { xmin = std::min(xmin, x); xmax = std::max(xmax, x); }
    for (double y : s.y) { ymin = std::min(ymin, y); ymax = std::max(ymax, y); }
  }
  if (!std::isfinite(xmin)) { xmin = 0.0; xmax = 1.0; ymin = 0.0; ymax = 1.0; }
  if (xmax == xmin) xmax = xmin + 1.0;
  if (ymax == ymin) { ymax += 0.5; ymin -= 0.5; }
  const double pad = 0.05 * (ymax - ymin);
  ymin -= pad;
  ymax += pad;

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * pw; };
  auto py = [&](double y) { return kTop + (ymax - y) / (ymax - ymin) * ph; };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << kLeft + pw / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
     << escape(plot.title) << "</text>\n";
  os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  if (ymin < 0.0 && ymax > 0.0) {
    os << "<line x1=\"" << kLeft << "\" y1=\"" << py(0.0) << "\" x2=\"" << kLeft + pw << "\" y2=\""
       << py(0.0) << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 3\"/>\n";
  }
  for (int i = 0; i <= 4; ++i) {
    const double xv = xmin + (xmax - xmin) * i / 4.0;
    const double yv = ymin + (ymax - ymin) * i / 4.0;
    os << "<text x=\"" << px(xv) << "\" y=\"" << kTop + ph + 18
       << "\" text-anchor=\"middle\" font-size=\"11\">" << tick(xv) << "</text>\n";
    os << "<text x=\"" << kLeft - 6 << "\" y=\"" << py(yv) + 4
       << "\" text-anchor=\"end\" font-size=\"11\">" << tick(yv) << "</text>\n";
  }
  os << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 10
     << "\" text-anchor=\"middle\" font-size=\"12\">" << escape(plot.x_label) << "</text>\n";
  os << "<text x=\"16\" y=\"" << kTop + ph / 2 << "\" text-anchor=\"middle\" font-size=\"12\""
     << " transform=\"rotate(-90 16 " << kTop + ph / 2 << ")\">" << escape(plot.y_label)
     << "</text>\n";

  for (std::size_t k = 0; k < plot.series.size(); ++k) {
    const Series& s = plot.series[k];
    const char* color = kColors[k % kColors.size()];
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    const std::size_t n = std::min(s.x.size(), s.y.size());
    // Thin very dense series; the CSV carries full resolution.
    const std::size_t stride = std::max<std::size_t>(1, n / 800);
    for (std::size_t i = 0; i < n; i += stride) {
      os << coord(px(s.x[i])) << ',' << coord(py(s.y[i])) << ' ';
    }
    if (n > 0 && (n - 1) % stride != 0) os << coord(px(s.x[n - 1])) << ',' << coord(py(s.y[n - 1]));
    os << "\"/>\n";
    const double ly = kTop + 14 + 18.0 * static_cast<double>(k);
    os << "<line x1=\"" << kLeft + pw + 10 << "\" y1=\"" << ly << "\" x2=\"" << kLeft + pw + 30
       << "\" y2=\"" << ly << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << kLeft + pw + 34 << "\" y=\"" << ly + 4 << "\" font-size=\"11\">"
       << escape(s.label) << "</text>\n";
  }
  os << "</svg>\n";
}

}  // namespace modesplit::svg
