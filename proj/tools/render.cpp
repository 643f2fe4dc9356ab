#include "render.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

namespace cayley::cli {

std::string format_number(double v) {
    if (v == 0.0) v = 0.0;  // drops the sign of -0
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return {buf, res.ptr};
}

std::string format_point(const Vec2& p) { return format_number(p.x()) + "," + format_number(p.y()); }

std::string render_csv(const std::vector<Vec2>& points) {
    std::string out = "x,y\n";
    for (const Vec2& p : points) {
        out += format_point(p);
        out += '\n';
    }
    return out;
}

std::string render_svg(const std::vector<std::vector<Vec2>>& branches, bool close_loops) {
    double min_x = std::numeric_limits<double>::infinity(), max_x = -min_x;
    double min_y = min_x, max_y = -min_x;
    for (const auto& branch : branches) {
        for (const Vec2& p : branch) {
            min_x = std::min(min_x, p.x());
            max_x = std::max(max_x, p.x());
            min_y = std::min(min_y, p.y());
            max_y = std::max(max_y, p.y());
        }
    }
    if (!std::isfinite(min_x)) min_x = max_x = min_y = max_y = 0.0;

    // a flat box (vertical line, single point) still needs a visible extent
    double w = max_x - min_x;
    double h = max_y - min_y;
    const double unit = std::max({w, h, 1e-9});
    if (w == 0.0) { min_x -= 0.5 * unit; w = unit; }
    if (h == 0.0) { min_y -= 0.5 * unit; h = unit; }
    const double pad_x = 0.05 * w, pad_y = 0.05 * h;
    const double vb_x = min_x - pad_x, vb_w = w + 2.0 * pad_x;
    const double vb_h = h + 2.0 * pad_y;
    // y-up: the group flips y, so the box spans [-(max_y + pad), -(min_y - pad)]
    const double vb_y = -(min_y + h + pad_y);
    const double stroke = 0.005 * std::max(vb_w, vb_h);

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"512\" height=\""
        << format_number(std::round(512.0 * vb_h / vb_w)) << "\" viewBox=\"" << format_number(vb_x) << ' '
        << format_number(vb_y) << ' ' << format_number(vb_w) << ' ' << format_number(vb_h) << "\">\n"
        << "  <g transform=\"scale(1,-1)\" fill=\"none\" stroke=\"black\" stroke-width=\""
        << format_number(stroke) << "\" stroke-linejoin=\"round\">\n";
    for (const auto& branch : branches) {
        if (branch.empty()) continue;
        svg << "    <polyline points=\"";
        for (std::size_t i = 0; i < branch.size(); ++i) {
            if (i) svg << ' ';
            svg << format_point(branch[i]);
        }
        if (close_loops && branch.size() > 2) svg << ' ' << format_point(branch.front());
        svg << "\"/>\n";
    }
    svg << "  </g>\n</svg>\n";
    return svg.str();
}

std::string render_table_text(const CayleyKleinTable& table) {
    constexpr MeasureKind kMeasures[3] = {MeasureKind::Elliptic, MeasureKind::Parabolic,
                                          MeasureKind::Hyperbolic};
    std::vector<std::vector<std::string>> grid(4, std::vector<std::string>(4));
    for (int j = 0; j < 3; ++j) grid[0][j + 1] = "length: " + std::string(to_string(kMeasures[j]));
    for (int i = 0; i < 3; ++i) {
        grid[i + 1][0] = "angle: " + std::string(to_string(kMeasures[i]));
        for (int j = 0; j < 3; ++j) grid[i + 1][j + 1] = std::string(table[i][j].english);
    }
    std::size_t widths[4] = {};
    for (const auto& row : grid) {
        for (int j = 0; j < 4; ++j) widths[j] = std::max(widths[j], row[j].size());
    }
    std::string out;
    for (const auto& row : grid) {
        std::string line;
        for (int j = 0; j < 4; ++j) {
            line += row[j];
            if (j < 3) line += std::string(widths[j] - row[j].size() + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + '\n';
    }
    return out;
}

}  // namespace cayley::cli
