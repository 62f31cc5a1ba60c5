#pragma once

#include <string>
#include <utility>
#include <vector>

namespace mpsorf {

/// Renders one series as a simple SVG line plot. Uses a log y-axis when every
/// value is positive. Output is deterministic.
std::string render_series_svg(const std::string& title,
                              const std::vector<std::pair<int, double>>& values);

}  // namespace mpsorf
