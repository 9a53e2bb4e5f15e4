#pragma once

#include "tilepack/tile.hpp"

namespace tilepack {

struct CatalogOptions {
    int max_height = 3;
    int max_width = 3;
    int max_area = 0; // 0 = unbounded
    bool include_bars = false;
};

// Every canonical tile whose bounding box fits in max_height x max_width,
// ordered by (area, height, width, cells). Bars are excluded unless
// requested. Throws Error when the bounding box is too large to enumerate.
std::vector<Tile> tile_catalog(const CatalogOptions& options = {});

} // namespace tilepack
