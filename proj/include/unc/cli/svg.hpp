#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "unc/core.hpp"

namespace unc::cli {

struct PlotPoint {
  UncertainScalar x;
  UncertainScalar y;
  std::size_t group = 0;
};

struct ScatterPlot {
  std::vector<PlotPoint> points;
  std::vector<std::string> groups;  // legend entries, indexed by PlotPoint::group
  std::string x_label;
  std::string y_label;
};

inline constexpr int kPlotWidth = 800;
inline constexpr int kPlotHeight = 600;

/// SVG 1.1 scatter plot on a fixed 800×600 canvas with 5% margins and linear
/// axes. Each point is a `<g class="obs">` holding a vertical bar
/// (class "ebar-v", y ± Δy), a horizontal bar (class "ebar-h", x ± Δx) and a
/// `<circle class="point">`; points with non-finite coordinates are left
/// out. The output contains no timestamps and depends only on the input.
std::string render_svg(const ScatterPlot& plot);

}  // namespace unc::cli
