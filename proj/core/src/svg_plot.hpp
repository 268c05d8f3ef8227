#pragma once

#include <string>
#include <utility>
#include <vector>

namespace shadowaudit::svg {

enum class Marker { Circle, Star, Square };

// Non-finite y values break the line and are not drawn.
struct Series {
  std::string label;  // SVG text markup
  Marker marker;
  std::vector<std::pair<double, double>> points;
};

struct HorizontalLine {
  double y;
  double x_from;
  double x_to;
};

struct Plot {
  std::string title;
  std::string x_label;  // SVG text markup
  std::string y_label;  // SVG text markup
  std::vector<Series> series;
  std::vector<HorizontalLine> lines;
};

// Self-contained SVG document. Output depends only on the plot contents.
std::string render(const Plot& plot);

}  // namespace shadowaudit::svg
