#include "planar_story/plot.hpp"

#include <algorithm>
#include <cstdio>

namespace pstory {

namespace {

constexpr double width = 640, height = 400, left = 60, right = 20, top = 40, bottom = 50;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct frame {
    double x0, x1, y0, y1;

    double sx(double x) const { return left + (x1 == x0 ? 0.5 : (x - x0) / (x1 - x0)) * (width - left - right); }
    double sy(double y) const { return height - bottom - (y1 == y0 ? 0.5 : (y - y0) / (y1 - y0)) * (height - top - bottom); }
};

std::string open_svg(const std::string& title, const std::string& xlabel, const std::string& ylabel) {
    std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" + num(height) +
                    "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
    s += "<rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) + "\" fill=\"white\"/>\n";
    s += "<text x=\"" + num(width / 2) + "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" +
         escape(title) + "</text>\n";
    s += "<line x1=\"" + num(left) + "\" y1=\"" + num(height - bottom) + "\" x2=\"" + num(width - right) + "\" y2=\"" +
         num(height - bottom) + "\" stroke=\"black\"/>\n";
    s += "<line x1=\"" + num(left) + "\" y1=\"" + num(top) + "\" x2=\"" + num(left) + "\" y2=\"" + num(height - bottom) +
         "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + num(width / 2) + "\" y=\"" + num(height - 12) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" + escape(xlabel) + "</text>\n";
    s += "<text x=\"16\" y=\"" + num(height / 2) + "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 16 " +
         num(height / 2) + ")\">" + escape(ylabel) + "</text>\n";
    return s;
}

std::string ticks(const frame& f) {
    std::string s;
    auto label = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%g", v);
        return std::string(buf);
    };
    s += "<text x=\"" + num(left - 6) + "\" y=\"" + num(f.sy(f.y0) + 4) + "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" + label(f.y0) + "</text>\n";
    s += "<text x=\"" + num(left - 6) + "\" y=\"" + num(f.sy(f.y1) + 4) + "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" + label(f.y1) + "</text>\n";
    s += "<text x=\"" + num(f.sx(f.x0)) + "\" y=\"" + num(height - bottom + 14) + "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">" + label(f.x0) + "</text>\n";
    s += "<text x=\"" + num(f.sx(f.x1)) + "\" y=\"" + num(height - bottom + 14) + "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">" + label(f.x1) + "</text>\n";
    return s;
}

std::string empty_caption() {
    return "<text x=\"" + num(width / 2) + "\" y=\"" + num(height / 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">no data</text>\n";
}

}  // namespace

std::string plot_frame_sizes(const std::vector<int>& sizes, const std::string& title) {
    std::string s = open_svg(title, "frame", "frame size");
    if (sizes.empty()) return s + empty_caption() + "</svg>\n";
    const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
    const frame f{1, static_cast<double>(sizes.size()), std::min(0, *lo) * 1.0, static_cast<double>(*hi)};
    s += ticks(f);
    s += "<polyline class=\"frames\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        s += (i ? " " : "") + num(f.sx(i + 1.0)) + "," + num(f.sy(sizes[i]));
    }
    s += "\"/>\n";
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        s += "<circle cx=\"" + num(f.sx(i + 1.0)) + "\" cy=\"" + num(f.sy(sizes[i])) + "\" r=\"3\" fill=\"steelblue\"/>\n";
    }
    return s + "</svg>\n";
}

std::string plot_gap_scatter(const std::vector<std::pair<double, double>>& points, const std::string& title) {
    std::string s = open_svg(title, "crossings", "gap");
    if (points.empty()) return s + empty_caption() + "</svg>\n";
    double x0 = points[0].first, x1 = x0, y1 = 0.0;
    for (auto [x, y] : points) {
        x0 = std::min(x0, x);
        x1 = std::max(x1, x);
        y1 = std::max(y1, y);
    }
    const frame f{x0, x1, 0.0, std::max(y1, 1e-9)};
    s += ticks(f);
    for (auto [x, y] : points) {
        s += "<circle class=\"point\" cx=\"" + num(f.sx(x)) + "\" cy=\"" + num(f.sy(y)) + "\" r=\"4\" fill=\"firebrick\"/>\n";
    }
    return s + "</svg>\n";
}

}  // namespace pstory
