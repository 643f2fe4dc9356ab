#pragma once

#include <string>
#include <vector>

#include "cayley/core.hpp"
#include "cayley/klein.hpp"

namespace cayley::cli {

/// Shortest decimal string that round-trips to the same double; -0 prints as 0.
std::string format_number(double v);

/// "x,y"
std::string format_point(const Vec2& p);

/// Header `x,y`, one point per row, LF endings.
std::string render_csv(const std::vector<Vec2>& points);

/// Standalone SVG 1.1 document with one stroked polyline per branch, drawn
/// y-up. The viewBox is the points' bounding box grown by 5% per side.
std::string render_svg(const std::vector<std::vector<Vec2>>& branches, bool close_loops);

/// 3x3 grid with angle-measure rows and length-measure columns.
std::string render_table_text(const CayleyKleinTable& table);

}  // namespace cayley::cli
