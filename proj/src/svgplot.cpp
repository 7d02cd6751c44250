#include "hookpoly/svgplot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "hookpoly/errors.hpp"

namespace hookpoly {

namespace {

constexpr double kCanvas = 640;  // drawing area is square, equal aspect for free
constexpr double kMargin = 40;

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    return buf;
}

} // namespace

std::vector<std::pair<double, double>> filter_points(
    const std::vector<std::pair<double, double>>& pts, const std::optional<PlotWindow>& window,
    std::optional<double> rmin, std::optional<double> rmax) {
    std::vector<std::pair<double, double>> out;
    for (const auto& [x, y] : pts) {
        if (window && (x < window->xmin || x > window->xmax || y < window->ymin ||
                       y > window->ymax))
            continue;
        double r = std::hypot(x, y);
        if (rmin && r < *rmin) continue;
        if (rmax && r > *rmax) continue;
        out.emplace_back(x, y);
    }
    return out;
}

PlotResult render_svg(const PlotSpec& spec) {
    if (!(spec.marker_radius > 0)) throw domain_error("plot: marker_radius must be positive");
    for (const auto& [x, y] : spec.points)
        if (!std::isfinite(x) || !std::isfinite(y))
            throw domain_error("plot: points must have finite coordinates");
    if (spec.window && !(spec.window->xmin < spec.window->xmax &&
                         spec.window->ymin < spec.window->ymax))
        throw domain_error("plot: window bounds must be ordered");

    // pick the data window: given, or the squared-up bounding box of the data
    double xmin, xmax, ymin, ymax;
    if (spec.window) {
        xmin = spec.window->xmin;
        xmax = spec.window->xmax;
        ymin = spec.window->ymin;
        ymax = spec.window->ymax;
    } else if (!spec.points.empty()) {
        xmin = xmax = spec.points[0].first;
        ymin = ymax = spec.points[0].second;
        for (const auto& [x, y] : spec.points) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
        double cx = 0.5 * (xmin + xmax), cy = 0.5 * (ymin + ymax);
        double half = 0.5 * std::max({xmax - xmin, ymax - ymin, 1e-9}) * 1.08;
        xmin = cx - half;
        xmax = cx + half;
        ymin = cy - half;
        ymax = cy + half;
    } else {
        xmin = ymin = -1.25;
        xmax = ymax = 1.25;
    }
    // equal aspect: widen the shorter side around its center
    double spanx = xmax - xmin, spany = ymax - ymin;
    if (spanx < spany) {
        double c = 0.5 * (xmin + xmax);
        xmin = c - spany / 2;
        xmax = c + spany / 2;
        spanx = spany;
    } else if (spany < spanx) {
        double c = 0.5 * (ymin + ymax);
        ymin = c - spanx / 2;
        ymax = c + spanx / 2;
        spany = spanx;
    }

    double scale = kCanvas / spanx;
    auto px = [&](double x) { return kMargin + (x - xmin) * scale; };
    auto py = [&](double y) { return kMargin + (ymax - y) * scale; };  // SVG y grows downward

    double side = kCanvas + 2 * kMargin;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(side) << "\" height=\""
        << num(side) << "\" viewBox=\"0 0 " << num(side) << " " << num(side) << "\">\n";
    svg << "  <rect x=\"0\" y=\"0\" width=\"" << num(side) << "\" height=\"" << num(side)
        << "\" fill=\"white\"/>\n";
    svg << "  <rect x=\"" << num(kMargin) << "\" y=\"" << num(kMargin) << "\" width=\""
        << num(kCanvas) << "\" height=\"" << num(kCanvas)
        << "\" fill=\"none\" stroke=\"#c8c8c8\" stroke-width=\"1\"/>\n";
    if (!spec.title.empty()) {
        std::string safe;
        for (char ch : spec.title) {
            if (ch == '&')
                safe += "&amp;";
            else if (ch == '<')
                safe += "&lt;";
            else if (ch == '>')
                safe += "&gt;";
            else
                safe += ch;
        }
        svg << "  <text x=\"" << num(side / 2) << "\" y=\"" << num(kMargin * 0.65)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" << safe
            << "</text>\n";
    }
    // coordinate axes, when the window sees them
    if (ymin < 0 && ymax > 0)
        svg << "  <line x1=\"" << num(kMargin) << "\" y1=\"" << num(py(0)) << "\" x2=\""
            << num(kMargin + kCanvas) << "\" y2=\"" << num(py(0))
            << "\" stroke=\"#b0b0b0\" stroke-width=\"1\"/>\n";
    if (xmin < 0 && xmax > 0)
        svg << "  <line x1=\"" << num(px(0)) << "\" y1=\"" << num(kMargin) << "\" x2=\""
            << num(px(0)) << "\" y2=\"" << num(kMargin + kCanvas)
            << "\" stroke=\"#b0b0b0\" stroke-width=\"1\"/>\n";
    if (spec.unit_circle)
        svg << "  <ellipse cx=\"" << num(px(0)) << "\" cy=\"" << num(py(0)) << "\" rx=\""
            << num(scale) << "\" ry=\"" << num(scale)
            << "\" fill=\"none\" stroke=\"#d8a8a8\" stroke-width=\"1\"/>\n";

    PlotResult res;
    for (const auto& [x, y] : spec.points) {
        if (x < xmin || x > xmax || y < ymin || y > ymax) continue;
        svg << "  <circle cx=\"" << num(px(x)) << "\" cy=\"" << num(py(y)) << "\" r=\""
            << num(spec.marker_radius) << "\" fill=\"#1f5f9f\" fill-opacity=\"0.75\"/>\n";
        ++res.plotted;
    }
    if (res.plotted == 0) {
        res.empty = true;
        svg << "  <text x=\"" << num(side / 2) << "\" y=\"" << num(side / 2)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
               "fill=\"#808080\">no points in window</text>\n";
    }
    svg << "</svg>\n";
    res.svg = svg.str();
    return res;
}

} // namespace hookpoly
