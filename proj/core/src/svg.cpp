#include "mpsorf/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace mpsorf {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

std::string render_series_svg(const std::string& title,
                              const std::vector<std::pair<int, double>>& values) {
    const int width = 640, height = 400;
    const int ml = 70, mr = 20, mt = 40, mb = 50;

    std::vector<std::pair<double, double>> pts;
    bool all_positive = !values.empty();
    for (const auto& [n, v] : values) {
        if (!std::isfinite(v)) continue;
        pts.emplace_back(double(n), v);
        if (!(v > 0.0)) all_positive = false;
    }

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + std::to_string(width / 2) +
           "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" +
           title + (all_positive ? " (log y)" : "") + "</text>\n";

    if (pts.size() >= 2) {
        auto ty = [&](double v) { return all_positive ? std::log10(v) : v; };
        double x0 = pts.front().first, x1 = pts.back().first;
        double y0 = std::numeric_limits<double>::infinity(), y1 = -y0;
        for (const auto& [x, y] : pts) {
            y0 = std::min(y0, ty(y));
            y1 = std::max(y1, ty(y));
        }
        if (y1 - y0 < 1e-12) {
            y0 -= 1.0;
            y1 += 1.0;
        }
        if (x1 - x0 < 1e-12) x1 = x0 + 1.0;
        auto px = [&](double x) { return ml + (x - x0) / (x1 - x0) * (width - ml - mr); };
        auto py = [&](double y) {
            return height - mb - (ty(y) - y0) / (y1 - y0) * (height - mt - mb);
        };

        // axes
        svg += "<line x1=\"" + std::to_string(ml) + "\" y1=\"" + std::to_string(mt) +
               "\" x2=\"" + std::to_string(ml) + "\" y2=\"" + std::to_string(height - mb) +
               "\" stroke=\"black\"/>\n";
        svg += "<line x1=\"" + std::to_string(ml) + "\" y1=\"" + std::to_string(height - mb) +
               "\" x2=\"" + std::to_string(width - mr) + "\" y2=\"" +
               std::to_string(height - mb) + "\" stroke=\"black\"/>\n";
        // y tick labels at the extremes
        const double ylab0 = all_positive ? std::pow(10.0, y0) : y0;
        const double ylab1 = all_positive ? std::pow(10.0, y1) : y1;
        svg += "<text x=\"8\" y=\"" + fmt(height - mb) +
               "\" font-family=\"sans-serif\" font-size=\"11\">" + fmt(ylab0) + "</text>\n";
        svg += "<text x=\"8\" y=\"" + fmt(mt + 4) +
               "\" font-family=\"sans-serif\" font-size=\"11\">" + fmt(ylab1) + "</text>\n";
        // x tick labels
        svg += "<text x=\"" + fmt(px(x0)) + "\" y=\"" + std::to_string(height - mb + 18) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
               fmt(x0) + "</text>\n";
        svg += "<text x=\"" + fmt(px(x1)) + "\" y=\"" + std::to_string(height - mb + 18) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
               fmt(x1) + "</text>\n";

        std::string poly;
        for (const auto& [x, y] : pts)
            poly += fmt(px(x)) + "," + fmt(py(y)) + " ";
        svg += "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"" +
               poly + "\"/>\n";
    } else {
        svg += "<text x=\"" + std::to_string(width / 2) + "\" y=\"" +
               std::to_string(height / 2) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
               "not enough finite points</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace mpsorf
