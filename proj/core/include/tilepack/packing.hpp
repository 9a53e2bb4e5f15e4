#pragma once

#include <string>
#include <vector>

#include "tilepack/tile.hpp"

namespace tilepack {

struct GridDims {
    int m = 0; // rows
    int n = 0; // columns
    auto operator<=>(const GridDims&) const = default;
};

// Translation positions of a fixed tile inside an m x n grid. Positions are
// kept sorted row-major; the tile itself travels separately (the wire format
// carries only dims and positions).
struct Packing {
    GridDims dims;
    std::vector<Cell> positions;
    bool operator==(const Packing&) const = default;
};

// Start-count projections: r[i] counts the copies starting in row i and s[j]
// the copies starting in column j.
struct ProjectionPair {
    std::vector<int> r;
    std::vector<int> s;
    bool operator==(const ProjectionPair&) const = default;
};

struct ValidityReport {
    enum class Status { Ok, OutOfGrid, Overlap };
    Status status = Status::Ok;
    Cell position;      // offending position (OutOfGrid), or first of the pair
    Cell second;        // second of the overlapping pair
    Vector2 difference; // witness conflicting difference vector (Overlap)
    bool ok() const { return status == Status::Ok; }
    std::string message() const;
};

// Checks containment of every copy and pairwise disjointness. Overlap is
// detected through the conflict profile: copies at u and v overlap exactly
// when u - v is a conflicting vector.
ValidityReport validate_packing(const Tile& tile, GridDims dims,
                                const std::vector<Cell>& positions);

// Projections count tile starts only, so they do not depend on the tile
// shape. Throws IndexOutOfRangeError for positions outside the grid.
ProjectionPair projections(GridDims dims, const std::vector<Cell>& positions);

// Union of the translated copies, sorted and deduplicated.
std::vector<Cell> covered_cells(const Tile& tile, const std::vector<Cell>& positions);

// ASCII picture of a valid packing: one text row per grid row, '.' for empty
// cells, copies labeled a..z cycling in row-major position order, row totals
// in the right margin and column totals in a final "s:" line.
std::string render(const Tile& tile, GridDims dims, const std::vector<Cell>& positions);

} // namespace tilepack
