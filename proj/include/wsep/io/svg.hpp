#pragma once

#include "wsep/plabic_graph.hpp"
#include "wsep/tiling.hpp"

#include <string>

namespace wsep::io {

struct svg_options {
    int scale = 100;      // drawing units per unit of the polygon's circle
    bool labels = true;   // subset labels next to the vertices
};

// Deterministic SVG: white faces open, black faces filled, vertices labeled
// in digit-string form; coordinates rounded to 6 decimals.
std::string render_svg(const embedded_tiling& et, const svg_options& opts = {});
// laid out through the dual tiling on the default polygon
std::string render_svg(const plabic_graph& g, const svg_options& opts = {});

// num/den rounded half away from zero to `digits` decimals
std::string decimal(geom::i128 num, geom::i128 den, int digits = 6);

} // namespace wsep::io
