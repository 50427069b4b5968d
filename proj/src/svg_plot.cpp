#include "homrates/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "homrates/errors.hpp"

namespace homrates {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 72.0;
constexpr double kRight = 24.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 56.0;

const char* kPalette[] = {"#1b6ca8", "#c03546", "#2e8b57", "#b8860b", "#6a4fa3", "#13868b"};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += ch;
        }
    }
    return out;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void grow(double v) {
        if (!std::isfinite(v)) return;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    bool valid() const { return lo <= hi; }
    // widen degenerate or empty ranges so the mapping below stays finite
    void finalize() {
        if (!valid()) {
            lo = 0.0;
            hi = 1.0;
        } else if (lo == hi) {
            lo -= 0.5;
            hi += 0.5;
        }
    }
    double frac(double v) const { return (v - lo) / (hi - lo); }
};

}  // namespace

std::string render_line_plot(const std::string& title, const std::string& x_label,
                             const std::string& y_label, const std::vector<PlotSeries>& series) {
    Range rx, ry;
    for (const auto& s : series) {
        if (s.x.size() != s.y.size())
            throw InvalidArgumentError("plot series '" + s.label + "' has mismatched x/y sizes");
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.y[i])) continue;
            rx.grow(s.x[i]);
            ry.grow(s.y[i]);
        }
    }
    rx.finalize();
    ry.finalize();

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto px = [&](double v) { return kLeft + rx.frac(v) * plot_w; };
    auto py = [&](double v) { return kTop + (1.0 - ry.frac(v)) * plot_h; };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth) + "\" height=\"" +
           fmt(kHeight) + "\" viewBox=\"0 0 " + fmt(kWidth) + " " + fmt(kHeight) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + fmt(kWidth / 2) + "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" +
           escape(title) + "</text>\n";

    // frame and ticks
    svg += "<rect x=\"" + fmt(kLeft) + "\" y=\"" + fmt(kTop) + "\" width=\"" + fmt(plot_w) +
           "\" height=\"" + fmt(plot_h) + "\" fill=\"none\" stroke=\"#333\"/>\n";
    constexpr int kTicks = 5;
    for (int i = 0; i <= kTicks; ++i) {
        const double f = static_cast<double>(i) / kTicks;
        const double xv = rx.lo + f * (rx.hi - rx.lo);
        const double yv = ry.lo + f * (ry.hi - ry.lo);
        const double xp = kLeft + f * plot_w;
        const double yp = kTop + (1.0 - f) * plot_h;
        svg += "<line x1=\"" + fmt(xp) + "\" y1=\"" + fmt(kTop + plot_h) + "\" x2=\"" + fmt(xp) +
               "\" y2=\"" + fmt(kTop + plot_h + 5) + "\" stroke=\"#333\"/>\n";
        svg += "<text x=\"" + fmt(xp) + "\" y=\"" + fmt(kTop + plot_h + 20) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" + fmt(xv) +
               "</text>\n";
        svg += "<line x1=\"" + fmt(kLeft - 5) + "\" y1=\"" + fmt(yp) + "\" x2=\"" + fmt(kLeft) +
               "\" y2=\"" + fmt(yp) + "\" stroke=\"#333\"/>\n";
        svg += "<text x=\"" + fmt(kLeft - 8) + "\" y=\"" + fmt(yp + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + fmt(yv) +
               "</text>\n";
    }
    svg += "<text x=\"" + fmt(kLeft + plot_w / 2) + "\" y=\"" + fmt(kHeight - 12) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
           escape(x_label) + "</text>\n";
    svg += "<text x=\"16\" y=\"" + fmt(kTop + plot_h / 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" transform=\"rotate(-90 16 " +
           fmt(kTop + plot_h / 2) + ")\">" + escape(y_label) + "</text>\n";

    // data
    const std::size_t n_colors = sizeof kPalette / sizeof kPalette[0];
    for (std::size_t si = 0; si < series.size(); ++si) {
        const auto& s = series[si];
        const char* color = kPalette[si % n_colors];
        std::string points;
        auto flush = [&]() {
            if (!points.empty()) {
                svg += "<polyline points=\"" + points + "\" fill=\"none\" stroke=\"" + color +
                       "\" stroke-width=\"1.5\"/>\n";
                points.clear();
            }
        };
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.y[i]) || !std::isfinite(s.x[i])) {
                flush();
                continue;
            }
            points += fmt(px(s.x[i])) + "," + fmt(py(s.y[i])) + " ";
        }
        flush();
        // legend entry
        const double ly = kTop + 16.0 + 18.0 * static_cast<double>(si);
        svg += "<line x1=\"" + fmt(kLeft + plot_w - 140) + "\" y1=\"" + fmt(ly) + "\" x2=\"" +
               fmt(kLeft + plot_w - 116) + "\" y2=\"" + fmt(ly) + "\" stroke=\"" + color +
               "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + fmt(kLeft + plot_w - 110) + "\" y=\"" + fmt(ly + 4) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" + escape(s.label) + "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace homrates
