#pragma once

// Static figures of a region: SVG grid cells or a binary PGM raster.

#include <string>

#include "gaussphi/regions.hpp"

namespace gaussphi {

enum class RenderFormat { Svg, Pgm };

RenderFormat parse_render_format(std::string_view text);

struct RenderSpec {
    RegionQuery query;
    RenderFormat format = RenderFormat::Svg;
    int cell_px = 8;  // svg only
};

inline constexpr int kDefaultRenderCap = 12;

// One <rect class="cell"> per member over the Oct_n box, with the origin outlined.
std::string render_svg(const RegionSet& set, int cell_px);

// P5 raster over the members' bounding box; members are 255, everything else 0.
std::string render_pgm(const RegionSet& set);

std::string render(const RenderSpec& spec, int cap = kDefaultRenderCap);

}  // namespace gaussphi
