#pragma once

#include <string>

#include "upbtiles/tiles.hpp"

namespace upb::svg {

/// d x d grid with layer-colored tiles, the central cell marked, and a
/// member-count annotation. 64 px per cell, deterministic output.
std::string tile_diagram(const tiles::TileLayout& lay);

}  // namespace upb::svg
