#pragma once

#include <compare>
#include <vector>

#include "tilepack/errors.hpp"

namespace tilepack {

// Grid cell in matrix convention: rows numbered top-down, columns left to
// right, upper-left cell is (0,0). Cells may be negative in intermediate
// translated form.
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

// Integer displacement between grid positions.
struct Vector2 {
    int di = 0;
    int dj = 0;
    Vector2 negated() const { return {-di, -dj}; }
    auto operator<=>(const Vector2&) const = default;
};

// Grid symmetry, applied in the fixed order: vflip, then hflip, then
// transpose. Identity when all flags are false.
struct Transform {
    bool vflip = false;
    bool hflip = false;
    bool transpose = false;
    bool identity() const { return !vflip && !hflip && !transpose; }
    auto operator<=>(const Transform&) const = default;
};

// The conflicting displacements of a tile, stored for the finite window
// |di| < h, |dj| < w. Queries outside the window answer false without
// storage: disjoint row or column ranges cannot overlap.
class ConflictProfile {
public:
    ConflictProfile(int height, int width, std::vector<Vector2> conflicting);

    bool contains(Vector2 v) const;
    const std::vector<Vector2>& vectors() const { return conflicting_; }
    int height() const { return h_; }
    int width() const { return w_; }

private:
    int h_ = 0, w_ = 0;
    std::vector<Vector2> conflicting_; // sorted
};

// A finite nonempty 4-connected set of cells in canonical position:
// min row = min col = 0. Width and height are the dimensions of the
// smallest enclosing rectangle. Immutable after construction.
class Tile {
public:
    Tile() = default; // empty placeholder; build real tiles via canonicalize

    // Translates an arbitrary cell set into canonical position and validates
    // it. The input is a set: duplicates collapse. Throws EmptyTileError or
    // DisconnectedTileError (the message names witness cells of two
    // components).
    static Tile canonicalize(std::vector<Cell> cells);

    const std::vector<Cell>& cells() const { return cells_; } // sorted row-major
    int width() const { return w_; }
    int height() const { return h_; }
    int area() const { return static_cast<int>(cells_.size()); }
    bool contains(Cell c) const;

    bool operator==(const Tile&) const = default;

private:
    std::vector<Cell> cells_;
    int w_ = 0, h_ = 0;
};

// True iff the tile is a single row or a single column.
bool is_bar(const Tile& t);

// Cells of the copy of t at position v.
std::vector<Cell> translate(const Tile& t, Vector2 v);

// True iff t overlaps its own copy displaced by v.
bool is_conflicting(const Tile& t, Vector2 v);

ConflictProfile conflict_profile(const Tile& t);

// Applies the flips/transpose and re-canonicalizes.
Tile apply_transform(const Tile& t, const Transform& tr);

// The fixed maximal conflicting vector of a non-bar tile: after applying
// `transform` (never a transpose), (-p, q) is conflicting for the transformed
// tile, p and q are positive, and no conflicting vector with both coordinates
// nonzero has a larger L1 norm. Tie-break is deterministic: a candidate
// already of the form (-p, +q) wins with the identity transform
// (lexicographically smallest among those); otherwise the lexicographically
// smallest candidate with both coordinates positive is taken and the tile is
// vflipped. Throws BarTileError.
struct MaxConflict {
    int p = 0;
    int q = 0;
    Transform transform;
};
MaxConflict select_max_conflict(const Tile& t);

// Smallest positive multiples clearing each axis: (a*p, 0) and (0, b*q) are
// non-conflicting while every smaller positive multiple conflicts. Expects a
// tile already normalized so that (-p, q) is conflicting.
struct AxisMultiples {
    int a = 0;
    int b = 0;
};
AxisMultiples compute_ab(const Tile& normalized, int p, int q);

} // namespace tilepack
