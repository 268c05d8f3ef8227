#include "svg_plot.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

namespace shadowaudit::svg {
namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 90.0;
constexpr double kRight = 30.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 60.0;

std::string fixed(double v, int decimals) {
  char buf[64];
  if (v == 0.0) v = 0.0;  // no "-0.00"
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, decimals);
  std::string out(buf, res.ptr);
  if (out.find_first_not_of("-0.") == std::string::npos) out = decimals > 0 ? "0." + std::string(decimals, '0') : "0";
  return out;
}

std::string coord(double v) { return fixed(v, 2); }

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  bool empty() const { return lo > hi; }
};

double nice_step(double span) {
  const double raw = span / 6.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double f = raw / mag;
  return (f < 1.5 ? 1.0 : f < 3.5 ? 2.0 : f < 7.5 ? 5.0 : 10.0) * mag;
}

void widen(Range& r) {
  if (r.empty()) {
    r.lo = 0.0;
    r.hi = 1.0;
  } else if (r.hi - r.lo < 1e-12 * std::max(1.0, std::fabs(r.hi))) {
    const double pad = std::max(0.5, std::fabs(r.hi) * 0.1);
    r.lo -= pad;
    r.hi += pad;
  }
}

void marker(std::ostringstream& out, Marker m, double x, double y) {
  switch (m) {
    case Marker::Circle:
      out << "<circle cx=\"" << coord(x) << "\" cy=\"" << coord(y)
          << "\" r=\"3.5\" fill=\"none\" stroke=\"black\"/>";
      break;
    case Marker::Square:
      out << "<rect x=\"" << coord(x - 3.5) << "\" y=\"" << coord(y - 3.5)
          << "\" width=\"7\" height=\"7\" fill=\"none\" stroke=\"black\"/>";
      break;
    case Marker::Star:
      out << "<path d=\"M" << coord(x - 4) << ' ' << coord(y) << 'H' << coord(x + 4) << 'M'
          << coord(x) << ' ' << coord(y - 4) << 'V' << coord(y + 4) << 'M' << coord(x - 3)
          << ' ' << coord(y - 3) << 'L' << coord(x + 3) << ' ' << coord(y + 3) << 'M'
          << coord(x - 3) << ' ' << coord(y + 3) << 'L' << coord(x + 3) << ' ' << coord(y - 3)
          << "\" stroke=\"black\" fill=\"none\"/>";
      break;
  }
}

}  // namespace

std::string render(const Plot& plot) {
  Range xr, yr;
  for (const auto& s : plot.series) {
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(y)) continue;
      xr.add(x);
      yr.add(y);
    }
  }
  for (const auto& line : plot.lines) {
    xr.add(line.x_from);
    xr.add(line.x_to);
    yr.add(line.y);
  }
  widen(xr);
  widen(yr);
  const double ypad = (yr.hi - yr.lo) * 0.05;
  yr.lo -= ypad;
  yr.hi += ypad;

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
  auto sy = [&](double y) { return kTop + (yr.hi - y) / (yr.hi - yr.lo) * ph; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight
      << "\" font-family=\"Times, serif\" font-size=\"14\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<title>" << plot.title << "</title>\n";

  // Axes: box-less, left and bottom only.
  out << "<g id=\"axes\" stroke=\"black\" fill=\"none\">"
      << "<path d=\"M" << coord(kLeft) << ' ' << coord(kTop) << 'V' << coord(kTop + ph) << 'H'
      << coord(kLeft + pw) << "\"/></g>\n";

  out << "<g id=\"xticks\" text-anchor=\"middle\">";
  {
    const double step = nice_step(xr.hi - xr.lo);
    const int decimals = std::max(0, -static_cast<int>(std::floor(std::log10(step))));
    for (double t = std::ceil(xr.lo / step) * step; t <= xr.hi + step * 1e-9; t += step) {
      const double x = sx(t);
      out << "<line x1=\"" << coord(x) << "\" y1=\"" << coord(kTop + ph) << "\" x2=\""
          << coord(x) << "\" y2=\"" << coord(kTop + ph + 5) << "\" stroke=\"black\"/>"
          << "<text x=\"" << coord(x) << "\" y=\"" << coord(kTop + ph + 20) << "\">"
          << fixed(t, decimals) << "</text>";
    }
  }
  out << "</g>\n<g id=\"yticks\" text-anchor=\"end\">";
  {
    const double step = nice_step(yr.hi - yr.lo);
    const int decimals = std::max(0, -static_cast<int>(std::floor(std::log10(step))));
    for (double t = std::ceil(yr.lo / step) * step; t <= yr.hi + step * 1e-9; t += step) {
      const double y = sy(t);
      out << "<line x1=\"" << coord(kLeft - 5) << "\" y1=\"" << coord(y) << "\" x2=\""
          << coord(kLeft) << "\" y2=\"" << coord(y) << "\" stroke=\"black\"/>"
          << "<text x=\"" << coord(kLeft - 8) << "\" y=\"" << coord(y + 4) << "\">"
          << fixed(t, decimals) << "</text>";
    }
  }
  out << "</g>\n";

  out << "<text id=\"xlabel\" x=\"" << coord(kLeft + pw / 2) << "\" y=\"" << coord(kHeight - 15)
      << "\" text-anchor=\"middle\" font-size=\"16\">" << plot.x_label << "</text>\n"
      << "<text id=\"ylabel\" x=\"12\" y=\"" << coord(kTop - 20)
      << "\" text-anchor=\"start\" font-size=\"16\">" << plot.y_label << "</text>\n";

  for (std::size_t i = 0; i < plot.lines.size(); ++i) {
    const auto& line = plot.lines[i];
    out << "<line class=\"reference\" data-y=\"" << fixed(line.y, 6) << "\" x1=\""
        << coord(sx(line.x_from)) << "\" y1=\"" << coord(sy(line.y)) << "\" x2=\""
        << coord(sx(line.x_to)) << "\" y2=\"" << coord(sy(line.y)) << "\" stroke=\"black\"/>\n";
  }

  for (std::size_t i = 0; i < plot.series.size(); ++i) {
    const auto& s = plot.series[i];
    out << "<g class=\"series\" id=\"series" << i << '"';
    if (!s.points.empty()) {
      out << " data-x-first=\"" << fixed(s.points.front().first, 0) << "\" data-x-last=\""
          << fixed(s.points.back().first, 0) << '"';
    }
    out << '>';
    std::string path;
    bool pen_down = false;
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(y)) {
        pen_down = false;
        continue;
      }
      path += pen_down ? 'L' : 'M';
      path += coord(sx(x)) + ' ' + coord(sy(y));
      pen_down = true;
    }
    if (!path.empty()) out << "<path d=\"" << path << "\" stroke=\"black\" fill=\"none\"/>";
    for (const auto& [x, y] : s.points) {
      if (std::isfinite(y)) marker(out, s.marker, sx(x), sy(y));
    }
    out << "</g>\n";
  }

  // Legend, one row in the top margin.
  out << "<g id=\"legend\">";
  for (std::size_t i = 0; i < plot.series.size(); ++i) {
    const double y = kTop - 25;
    const double x = kLeft + pw - 160.0 * static_cast<double>(plot.series.size() - i);
    out << "<line x1=\"" << coord(x) << "\" y1=\"" << coord(y) << "\" x2=\"" << coord(x + 30)
        << "\" y2=\"" << coord(y) << "\" stroke=\"black\"/>";
    marker(out, plot.series[i].marker, x + 15, y);
    out << "<text x=\"" << coord(x + 38) << "\" y=\"" << coord(y + 5) << "\">"
        << plot.series[i].label << "</text>";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace shadowaudit::svg
