#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace modesplit::svg {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct LinePlot {
  std::string title;
  std::string x_label = "z / H(0)";
  std::string y_label;
  std::vector<Series> series;
};

/// Minimal standalone SVG line plot, one polyline per series.
void write_line_plot(std::ostream& os, const LinePlot& plot);

}  // namespace modesplit::svg
