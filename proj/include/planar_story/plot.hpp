#pragma once

#include <string>
#include <utility>
#include <vector>

namespace pstory {

// Frame size against frame index as a polyline with one marker per frame.
std::string plot_frame_sizes(const std::vector<int>& sizes, const std::string& title);

// Scatter of (crossing count, gap).
std::string plot_gap_scatter(const std::vector<std::pair<double, double>>& points, const std::string& title);

}  // namespace pstory
