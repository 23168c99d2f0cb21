#pragma once
// Deterministic pictures of assemblies. The SVG renderer draws one
// `class="tile"` rectangle per anchor cell (duple partner cells get
// `class="tile-ext"`), glue labels on bonded-or-labeled sides, and side
// geometry as small rectangles protruding from the tile edge. The ASCII
// renderer draws a box-character grid with geometry bumps marked ^ v < > on
// the walls. Both emit identical bytes for identical inputs.

#include <string>

#include "tilesim/core.hpp"

namespace tilesim {

std::string render_svg(const TileSystem& sys, const Assembly& a);
std::string render_ascii(const TileSystem& sys, const Assembly& a);

}  // namespace tilesim
