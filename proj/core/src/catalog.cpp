#include "tilepack/catalog.hpp"

#include <algorithm>

namespace tilepack {

std::vector<Tile> tile_catalog(const CatalogOptions& options) {
    const int H = options.max_height, W = options.max_width;
    if (H < 1 || W < 1) throw Error("catalog bounds must be positive");
    if (H * W > 24) throw Error("catalog bounding box too large to enumerate");

    std::vector<Tile> out;
    const uint32_t total = 1u << (H * W);
    for (uint32_t mask = 1; mask < total; ++mask) {
        std::vector<Cell> cells;
        bool touches_top = false, touches_left = false;
        for (int bit = 0; bit < H * W; ++bit) {
            if (!(mask & (1u << bit))) continue;
            const int row = bit / W, col = bit % W;
            cells.push_back({row, col});
            touches_top |= row == 0;
            touches_left |= col == 0;
        }
        if (!touches_top || !touches_left) continue; // not canonical: a translate will be seen
        if (options.max_area && static_cast<int>(cells.size()) > options.max_area) continue;

        try {
            Tile t = Tile::canonicalize(std::move(cells));
            if (!options.include_bars && is_bar(t)) continue;
            out.push_back(std::move(t));
        } catch (const DisconnectedTileError&) {
            continue;
        }
    }
    std::sort(out.begin(), out.end(), [](const Tile& a, const Tile& b) {
        if (a.area() != b.area()) return a.area() < b.area();
        if (a.height() != b.height()) return a.height() < b.height();
        if (a.width() != b.width()) return a.width() < b.width();
        return a.cells() < b.cells();
    });
    return out;
}

} // namespace tilepack
