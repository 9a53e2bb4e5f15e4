#include "tilepack/tile.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>

namespace tilepack {
namespace {

std::string cell_str(Cell c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

} // namespace

ConflictProfile::ConflictProfile(int height, int width, std::vector<Vector2> conflicting)
    : h_(height), w_(width), conflicting_(std::move(conflicting)) {
    std::sort(conflicting_.begin(), conflicting_.end());
}

bool ConflictProfile::contains(Vector2 v) const {
    if (std::abs(v.di) >= h_ || std::abs(v.dj) >= w_) return false;
    return std::binary_search(conflicting_.begin(), conflicting_.end(), v);
}

Tile Tile::canonicalize(std::vector<Cell> cells) {
    if (cells.empty()) throw EmptyTileError("tile has no cells");
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

    int min_row = cells.front().row, min_col = cells.front().col;
    for (const Cell& c : cells) {
        min_row = std::min(min_row, c.row);
        min_col = std::min(min_col, c.col);
    }
    for (Cell& c : cells) {
        c.row -= min_row;
        c.col -= min_col;
    }

    Tile t;
    t.cells_ = std::move(cells);
    for (const Cell& c : t.cells_) {
        t.h_ = std::max(t.h_, c.row + 1);
        t.w_ = std::max(t.w_, c.col + 1);
    }

    // 4-connectivity by flood fill from the first cell.
    std::vector<uint8_t> seen(t.cells_.size(), 0);
    std::vector<size_t> stack{0};
    seen[0] = 1;
    size_t reached = 1;
    auto index_of = [&](Cell c) -> std::optional<size_t> {
        auto it = std::lower_bound(t.cells_.begin(), t.cells_.end(), c);
        if (it == t.cells_.end() || *it != c) return std::nullopt;
        return static_cast<size_t>(it - t.cells_.begin());
    };
    while (!stack.empty()) {
        const Cell c = t.cells_[stack.back()];
        stack.pop_back();
        const Cell nbrs[4] = {{c.row - 1, c.col}, {c.row + 1, c.col},
                              {c.row, c.col - 1}, {c.row, c.col + 1}};
        for (const Cell& nb : nbrs) {
            if (auto idx = index_of(nb); idx && !seen[*idx]) {
                seen[*idx] = 1;
                ++reached;
                stack.push_back(*idx);
            }
        }
    }
    if (reached != t.cells_.size()) {
        size_t missing = 0;
        while (seen[missing]) ++missing;
        throw DisconnectedTileError("tile is not 4-connected: cell " +
                                    cell_str(t.cells_[0]) + " cannot reach cell " +
                                    cell_str(t.cells_[missing]));
    }
    return t;
}

bool Tile::contains(Cell c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

bool is_bar(const Tile& t) {
    return t.width() == 1 || t.height() == 1;
}

std::vector<Cell> translate(const Tile& t, Vector2 v) {
    std::vector<Cell> out;
    out.reserve(t.cells().size());
    for (const Cell& c : t.cells()) out.push_back({c.row + v.di, c.col + v.dj});
    return out;
}

bool is_conflicting(const Tile& t, Vector2 v) {
    if (std::abs(v.di) >= t.height() || std::abs(v.dj) >= t.width()) return false;
    for (const Cell& c : t.cells())
        if (t.contains({c.row + v.di, c.col + v.dj})) return true;
    return false;
}

ConflictProfile conflict_profile(const Tile& t) {
    std::vector<Vector2> found;
    for (int di = -(t.height() - 1); di <= t.height() - 1; ++di)
        for (int dj = -(t.width() - 1); dj <= t.width() - 1; ++dj)
            if (is_conflicting(t, {di, dj})) found.push_back({di, dj});
    return ConflictProfile(t.height(), t.width(), std::move(found));
}

Tile apply_transform(const Tile& t, const Transform& tr) {
    std::vector<Cell> cs = t.cells();
    if (tr.vflip) {
        for (Cell& c : cs) c.row = t.height() - 1 - c.row;
    }
    if (tr.hflip) {
        for (Cell& c : cs) c.col = t.width() - 1 - c.col;
    }
    if (tr.transpose) {
        for (Cell& c : cs) std::swap(c.row, c.col);
    }
    return Tile::canonicalize(std::move(cs));
}

MaxConflict select_max_conflict(const Tile& t) {
    if (is_bar(t))
        throw BarTileError("maximal conflicting vector is defined only for non-bar tiles");
    const ConflictProfile profile = conflict_profile(t);

    int best = 0;
    for (const Vector2& v : profile.vectors())
        if (v.di != 0 && v.dj != 0)
            best = std::max(best, std::abs(v.di) + std::abs(v.dj));
    if (best == 0)
        throw InternalInconsistencyError(
            "non-bar tile has no conflicting vector with nonzero coordinates");

    // profile.vectors() is sorted, so the first hit is lexicographically
    // smallest in its class.
    std::optional<Vector2> identity_form; // di < 0 < dj
    std::optional<Vector2> positive_form; // di > 0, dj > 0
    for (const Vector2& v : profile.vectors()) {
        if (v.di == 0 || v.dj == 0 || std::abs(v.di) + std::abs(v.dj) != best) continue;
        if (v.di < 0 && v.dj > 0 && !identity_form) identity_form = v;
        if (v.di > 0 && v.dj > 0 && !positive_form) positive_form = v;
    }
    if (identity_form) return {-identity_form->di, identity_form->dj, Transform{}};
    // Negation symmetry: with no (-p,+q) candidate, every candidate pair has
    // exactly one member with both coordinates positive; vflip sends it to
    // the (-p, q) form.
    if (!positive_form)
        throw InternalInconsistencyError("conflict profile lost negation symmetry");
    return {positive_form->di, positive_form->dj, Transform{.vflip = true}};
}

AxisMultiples compute_ab(const Tile& normalized, int p, int q) {
    AxisMultiples out{1, 1};
    while (is_conflicting(normalized, {out.a * p, 0})) ++out.a;
    while (is_conflicting(normalized, {0, out.b * q})) ++out.b;
    return out;
}

} // namespace tilepack
