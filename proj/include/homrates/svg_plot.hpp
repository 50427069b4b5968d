#pragma once

#include <string>
#include <vector>

namespace homrates {

// Minimal self-contained line-chart rendering for the --format svg output
// path. No text escaping beyond the basic entities; callers pass plain ASCII
// labels. NaN samples break the polyline instead of being drawn.
struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

std::string render_line_plot(const std::string& title, const std::string& x_label,
                             const std::string& y_label, const std::vector<PlotSeries>& series);

}  // namespace homrates
