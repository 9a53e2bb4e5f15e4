#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tilepack/packing.hpp"

namespace tilepack {

struct TptpInstance {
    Tile tile;
    GridDims dims;
    ProjectionPair target;
};

enum class Color { R = 0, G = 1, B = 2 };
inline constexpr std::array<Color, 3> kColors{Color::R, Color::G, Color::B};
char color_letter(Color c);

// Six per-color margin vectors of an m x n three-coloring.
struct ThreeColorInstance {
    int m = 0, n = 0;
    std::array<std::vector<int>, 3> rows; // indexed by Color
    std::array<std::vector<int>, 3> cols;
};

struct ColorMatrix {
    int m = 0, n = 0;
    std::vector<Color> values; // row-major
    Color at(int x, int y) const { return values[static_cast<size_t>(x) * n + y]; }
    Color& at(int x, int y) { return values[static_cast<size_t>(x) * n + y]; }
    bool operator==(const ColorMatrix&) const = default;
};

struct SearchLimits {
    std::optional<long long> max_nodes;
    std::optional<long long> max_solutions;
    std::optional<double> timeout_secs;
    int jobs = 1;
    bool limited() const { return max_nodes || max_solutions || timeout_secs; }
};

enum class SolveMode { Decide, Find, Count, Enumerate };
enum class SolveStatus { Feasible, Infeasible, LimitExceeded };

struct SearchStats {
    long long nodes = 0;
};

struct TptpResult {
    SolveStatus status = SolveStatus::Infeasible;
    std::optional<Packing> witness;               // Find mode
    std::optional<long long> count;               // Count/Enumerate, exact unless limited
    std::vector<std::vector<Cell>> solutions;     // Enumerate: sorted position sets, sorted
    SearchStats stats;
    std::string reason;                           // quick-reject explanation
};

struct ThreeColorResult {
    SolveStatus status = SolveStatus::Infeasible;
    std::optional<ColorMatrix> witness;
    std::optional<long long> count;
    std::vector<ColorMatrix> solutions;
    SearchStats stats;
    std::string reason;
};

// Complete backtracking search over start cells in row-major order with
// budget pruning. Results are deterministic and identical for any job count.
// Throws MalformedInstanceError on structural problems.
TptpResult solve_tptp(const TptpInstance& inst, SolveMode mode,
                      const SearchLimits& limits = {});

// Complete column-by-column search over colorings. Feasibility preconditions
// (per-color sum balance, per-row sum n, per-column sum m) are checked, not
// assumed; violations report infeasible with a reason.
ThreeColorResult solve_3ctp(const ThreeColorInstance& inst, SolveMode mode,
                            const SearchLimits& limits = {});

// Classical greedy reconstruction for the single-cell tile: returns a 0-1
// matrix with row sums r and column sums s when one exists, nullopt
// otherwise. Rows are filled in non-increasing r order, assigning to the
// columns with the largest remaining demand, ties broken by lowest index.
std::optional<std::vector<std::vector<int>>> ryser_single_cell(
    const std::vector<int>& r, const std::vector<int>& s);

// Maximum number of pairwise non-overlapping copies whose start positions lie
// in row_set x col_set; no projection constraint. Exact branch and bound.
int xi(const Tile& tile, GridDims dims, const std::vector<int>& row_set,
       const std::vector<int>& col_set);

} // namespace tilepack
