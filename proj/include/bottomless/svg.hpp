#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bottomless/planar.hpp"
#include "bottomless/point_io.hpp"

namespace bottomless {

// Largest color value the palette can paint.
int svg_max_color();

// SVG 1.1 document on a fixed 640x480 canvas: points as circles filled by
// color (0 and missing colors render gray), optional bottomless rectangle as
// a shaded region clipped to the canvas.  `colors` is empty or one entry per
// point, each within the palette.  All numbers are emitted with three
// decimals, so equal inputs produce byte-identical documents.
std::string render_svg(const std::vector<PointRecord>& points,
                       const std::vector<int>& colors,
                       const std::optional<BottomlessRect>& rect);

}  // namespace bottomless
