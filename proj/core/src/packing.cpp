#include "tilepack/packing.hpp"

#include <algorithm>

namespace tilepack {

std::string ValidityReport::message() const {
    auto cell_str = [](Cell c) {
        return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
    };
    switch (status) {
        case Status::Ok:
            return "ok";
        case Status::OutOfGrid:
            return "copy at " + cell_str(position) + " is not contained in the grid";
        case Status::Overlap:
            return "copies at " + cell_str(position) + " and " + cell_str(second) +
                   " overlap; difference (" + std::to_string(difference.di) + "," +
                   std::to_string(difference.dj) + ") is conflicting";
    }
    return "";
}

ValidityReport validate_packing(const Tile& tile, GridDims dims,
                                const std::vector<Cell>& positions) {
    for (const Cell& p : positions) {
        if (p.row < 0 || p.col < 0 || p.row + tile.height() > dims.m ||
            p.col + tile.width() > dims.n) {
            ValidityReport rep;
            rep.status = ValidityReport::Status::OutOfGrid;
            rep.position = p;
            return rep;
        }
    }
    const ConflictProfile profile = conflict_profile(tile);
    std::vector<Cell> sorted = positions;
    std::sort(sorted.begin(), sorted.end());
    for (size_t x = 0; x < sorted.size(); ++x) {
        for (size_t y = x + 1; y < sorted.size(); ++y) {
            const Vector2 d{sorted[y].row - sorted[x].row, sorted[y].col - sorted[x].col};
            if (d.di >= tile.height()) break; // rows are nondecreasing past y
            if (profile.contains(d)) {
                ValidityReport rep;
                rep.status = ValidityReport::Status::Overlap;
                rep.position = sorted[x];
                rep.second = sorted[y];
                rep.difference = d;
                return rep;
            }
        }
    }
    return {};
}

ProjectionPair projections(GridDims dims, const std::vector<Cell>& positions) {
    ProjectionPair pp{std::vector<int>(dims.m, 0), std::vector<int>(dims.n, 0)};
    for (const Cell& p : positions) {
        if (p.row < 0 || p.row >= dims.m || p.col < 0 || p.col >= dims.n)
            throw IndexOutOfRangeError("start position outside the grid");
        ++pp.r[p.row];
        ++pp.s[p.col];
    }
    return pp;
}

std::vector<Cell> covered_cells(const Tile& tile, const std::vector<Cell>& positions) {
    std::vector<Cell> out;
    out.reserve(positions.size() * tile.cells().size());
    for (const Cell& p : positions)
        for (const Cell& c : tile.cells())
            out.push_back({c.row + p.row, c.col + p.col});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string render(const Tile& tile, GridDims dims, const std::vector<Cell>& positions) {
    const ValidityReport rep = validate_packing(tile, dims, positions);
    if (!rep.ok())
        throw MalformedInstanceError("cannot render invalid packing: " + rep.message());

    std::vector<Cell> sorted = positions;
    std::sort(sorted.begin(), sorted.end());

    std::vector<std::string> grid(dims.m, std::string(dims.n, '.'));
    for (size_t idx = 0; idx < sorted.size(); ++idx) {
        const char label = static_cast<char>('a' + idx % 26);
        for (const Cell& c : translate(tile, {sorted[idx].row, sorted[idx].col}))
            grid[c.row][c.col] = label;
    }

    const ProjectionPair pp = projections(dims, sorted);
    std::string out;
    for (int i = 0; i < dims.m; ++i)
        out += grid[i] + " " + std::to_string(pp.r[i]) + "\n";
    out += "s:";
    for (int j = 0; j < dims.n; ++j) out += " " + std::to_string(pp.s[j]);
    out += "\n";
    return out;
}

} // namespace tilepack
