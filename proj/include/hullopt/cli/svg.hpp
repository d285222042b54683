#pragma once

#include <string>
#include <vector>

namespace hullopt::cli {

/// One polyline in a plot, in data coordinates.
struct SvgSeries {
    std::string label;
    std::string color = "#1f6fb2";
    std::vector<double> x;
    std::vector<double> y;
};

/// Minimal standalone SVG line plot: axes, tick labels, legend, one polyline
/// per series. `log_y` plots log10 of the (positive) values.
void write_svg_plot(const std::string& path, const std::string& title, const std::string& x_label,
                    const std::string& y_label, const std::vector<SvgSeries>& series, bool log_y = false);

}  // namespace hullopt::cli
