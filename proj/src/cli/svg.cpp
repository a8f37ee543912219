#include "unc/cli/svg.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>

namespace unc::cli {
namespace {

// R's default palette.
constexpr std::array<const char*, 8> kPalette = {
    "#000000", "#DF536B", "#61D04F", "#2297E6", "#28E2E5", "#CD0BBC", "#F5C710", "#9E9E9E",
};

constexpr double kMarginX = 0.05 * kPlotWidth;
constexpr double kMarginY = 0.05 * kPlotHeight;

std::string fixed(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
  std::string s(buf, res.ptr);
  return s == "-0.00" ? "0.00" : s;
}

std::string label_number(double v) {
  if (std::fabs(v) < 1e-12) v = 0.0;
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 4);
  return std::string(buf, res.ptr);
}

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

struct Axis {
  double lo;
  double hi;
  double pixel_lo;
  double pixel_hi;

  double map(double v) const { return pixel_lo + (v - lo) / (hi - lo) * (pixel_hi - pixel_lo); }
};

Axis make_axis(double lo, double hi, double pixel_lo, double pixel_hi) {
  if (!(lo <= hi)) {
    lo = 0.0;
    hi = 1.0;
  }
  if (hi == lo) {
    const double pad = lo == 0.0 ? 0.5 : 0.05 * std::fabs(lo);
    lo -= pad;
    hi += pad;
  }
  return {lo, hi, pixel_lo, pixel_hi};
}

bool drawable(const PlotPoint& p) {
  return std::isfinite(p.x.value) && std::isfinite(p.y.value) && std::isfinite(p.x.error) &&
         std::isfinite(p.y.error);
}

std::string line(const char* cls, double x1, double y1, double x2, double y2) {
  return std::string("<line class=\"") + cls + "\" x1=\"" + fixed(x1) + "\" y1=\"" + fixed(y1) +
         "\" x2=\"" + fixed(x2) + "\" y2=\"" + fixed(y2) + "\"/>";
}

}  // namespace

std::string render_svg(const ScatterPlot& plot) {
  double x_lo = std::numeric_limits<double>::infinity();
  double x_hi = -x_lo;
  double y_lo = x_lo;
  double y_hi = -x_lo;
  for (const auto& p : plot.points) {
    if (!drawable(p)) continue;
    x_lo = std::min(x_lo, p.x.value - p.x.error);
    x_hi = std::max(x_hi, p.x.value + p.x.error);
    y_lo = std::min(y_lo, p.y.value - p.y.error);
    y_hi = std::max(y_hi, p.y.value + p.y.error);
  }
  const double left = kMarginX;
  const double right = kPlotWidth - kMarginX;
  const double top = kMarginY;
  const double bottom = kPlotHeight - kMarginY;
  const Axis xa = make_axis(x_lo, x_hi, left, right);
  const Axis ya = make_axis(y_lo, y_hi, bottom, top);

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
       std::to_string(kPlotWidth) + "\" height=\"" + std::to_string(kPlotHeight) +
       "\" viewBox=\"0 0 " + std::to_string(kPlotWidth) + " " + std::to_string(kPlotHeight) +
       "\">\n";
  s += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(kPlotWidth) + "\" height=\"" +
       std::to_string(kPlotHeight) + "\" fill=\"white\"/>\n";

  s += "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n";
  s += line("axis-x", left, bottom, right, bottom) + "\n";
  s += line("axis-y", left, bottom, left, top) + "\n";
  constexpr int kTicks = 5;
  for (int i = 0; i < kTicks; ++i) {
    const double t = static_cast<double>(i) / (kTicks - 1);
    const double xv = xa.lo + t * (xa.hi - xa.lo);
    const double yv = ya.lo + t * (ya.hi - ya.lo);
    s += line("tick-x", xa.map(xv), bottom, xa.map(xv), bottom + 4) + "\n";
    s += line("tick-y", left - 4, ya.map(yv), left, ya.map(yv)) + "\n";
  }
  s += "</g>\n";

  s += "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"10\" fill=\"black\">\n";
  for (int i = 0; i < kTicks; ++i) {
    const double t = static_cast<double>(i) / (kTicks - 1);
    const double xv = xa.lo + t * (xa.hi - xa.lo);
    const double yv = ya.lo + t * (ya.hi - ya.lo);
    s += "<text x=\"" + fixed(xa.map(xv)) + "\" y=\"" + fixed(bottom + 14) +
         "\" text-anchor=\"middle\">" + label_number(xv) + "</text>\n";
    s += "<text x=\"" + fixed(left - 6) + "\" y=\"" + fixed(ya.map(yv) + 3) +
         "\" text-anchor=\"end\">" + label_number(yv) + "</text>\n";
  }
  s += "<text x=\"" + fixed((left + right) / 2) + "\" y=\"" + fixed(kPlotHeight - 4.0) +
       "\" text-anchor=\"middle\">" + escape(plot.x_label) + "</text>\n";
  s += "<text x=\"12.00\" y=\"" + fixed((top + bottom) / 2) +
       "\" text-anchor=\"middle\" transform=\"rotate(-90 12.00 " + fixed((top + bottom) / 2) +
       ")\">" + escape(plot.y_label) + "</text>\n";
  s += "</g>\n";

  s += "<g class=\"points\" stroke-width=\"1\" fill=\"none\">\n";
  for (const auto& p : plot.points) {
    if (!drawable(p)) continue;
    const char* color = kPalette[p.group % kPalette.size()];
    const double px = xa.map(p.x.value);
    const double py = ya.map(p.y.value);
    s += "<g class=\"obs\" stroke=\"" + std::string(color) + "\">";
    s += line("ebar-v", px, ya.map(p.y.value - p.y.error), px, ya.map(p.y.value + p.y.error));
    s += line("ebar-h", xa.map(p.x.value - p.x.error), py, xa.map(p.x.value + p.x.error), py);
    s += "<circle class=\"point\" cx=\"" + fixed(px) + "\" cy=\"" + fixed(py) + "\" r=\"3\"/>";
    s += "</g>\n";
  }
  s += "</g>\n";

  if (plot.groups.size() > 1 || (plot.groups.size() == 1 && !plot.groups.front().empty())) {
    s += "<g class=\"legend\" font-family=\"sans-serif\" font-size=\"11\">\n";
    for (std::size_t g = 0; g < plot.groups.size(); ++g) {
      const double y = top + 8 + 16.0 * static_cast<double>(g);
      s += "<rect x=\"" + fixed(right - 110) + "\" y=\"" + fixed(y - 8) +
           "\" width=\"10\" height=\"10\" fill=\"" + kPalette[g % kPalette.size()] + "\"/>";
      s += "<text x=\"" + fixed(right - 94) + "\" y=\"" + fixed(y + 1) + "\" fill=\"black\">" +
           escape(plot.groups[g]) + "</text>\n";
    }
    s += "</g>\n";
  }
  s += "</svg>\n";
  return s;
}

}  // namespace unc::cli
