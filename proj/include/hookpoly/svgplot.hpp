#pragma once

// Deterministic scatter plots of root sets as standalone SVG: equal-aspect
// axes, optional unit-circle guide, fixed decimal formatting so identical
// inputs produce identical bytes.

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hookpoly {

struct PlotWindow {
    double xmin, xmax, ymin, ymax;
};

struct PlotSpec {
    std::vector<std::pair<double, double>> points;
    std::optional<PlotWindow> window;  // absent: squared-up data bounds
    double marker_radius = 3.0;        // pixels
    std::string title;
    bool unit_circle = false;
};

struct PlotResult {
    std::string svg;
    std::size_t plotted = 0;
    bool empty = false;  // nothing landed inside the window
};

// points must be finite; marker_radius positive
PlotResult render_svg(const PlotSpec& spec);

// window / modulus-band pre-filter applied by the CLI before rendering
std::vector<std::pair<double, double>> filter_points(
    const std::vector<std::pair<double, double>>& pts, const std::optional<PlotWindow>& window,
    std::optional<double> rmin, std::optional<double> rmax);

} // namespace hookpoly
