#include "tilepack/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <functional>
#include <numeric>
#include <thread>

namespace tilepack {

char color_letter(Color c) {
    switch (c) {
        case Color::R: return 'R';
        case Color::G: return 'G';
        case Color::B: return 'B';
    }
    return '?';
}

namespace {

using Clock = std::chrono::steady_clock;

struct SearchControl {
    long long nodes = 0;
    long long node_budget = -1; // <0: unlimited
    bool has_deadline = false;
    Clock::time_point deadline{};
    // Parallel decide/find: subtrees above the best feasible index are moot.
    const std::atomic<long long>* skip_above = nullptr;
    long long task_index = -1;
    bool limit_hit = false;
    bool cancelled = false;

    // Returns false when the search must unwind.
    bool tick() {
        ++nodes;
        if (node_budget >= 0 && nodes > node_budget) {
            limit_hit = true;
            return false;
        }
        if (has_deadline && (nodes & 1023) == 0 && Clock::now() > deadline) {
            limit_hit = true;
            return false;
        }
        if (skip_above &&
            task_index > skip_above->load(std::memory_order_relaxed)) {
            cancelled = true;
            return false;
        }
        return true;
    }
};

void apply_limits(SearchControl& ctl, const SearchLimits& limits) {
    if (limits.max_nodes) ctl.node_budget = *limits.max_nodes;
    if (limits.timeout_secs) {
        ctl.has_deadline = true;
        ctl.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double>(*limits.timeout_secs));
    }
}

// ---------------------------------------------------------------------------
// TPTP search

struct TptpConfig {
    GridDims dims;
    std::vector<Cell> tile_cells;
    int h = 0, w = 0;
    int maxi = 0, maxj = 0; // largest legal start row/column
};

struct TptpState {
    std::vector<int> rrem, srem;
    std::vector<uint8_t> occupied; // m*n
    std::vector<Cell> placed;      // row-major by construction
};

bool copy_fits(const TptpConfig& cfg, const TptpState& st, int i, int j) {
    for (const Cell& c : cfg.tile_cells)
        if (st.occupied[static_cast<size_t>(i + c.row) * cfg.dims.n + (j + c.col)])
            return false;
    return true;
}

void mark_copy(const TptpConfig& cfg, TptpState& st, int i, int j, uint8_t v) {
    for (const Cell& c : cfg.tile_cells)
        st.occupied[static_cast<size_t>(i + c.row) * cfg.dims.n + (j + c.col)] = v;
}

// Branches on place/skip for each candidate start cell in row-major order.
// Returns false to unwind (limit, cancellation, or the emit callback asked to
// stop); dead branches return true.
bool tptp_search(const TptpConfig& cfg, TptpState& st, SearchControl& ctl, int i, int j,
                 const std::function<bool(const TptpState&)>& emit) {
    if (i > cfg.maxi) {
        // Row budgets are exhausted exactly, and column budgets sum to the
        // same total, so every srem is zero here: this is a solution.
        return emit(st);
    }
    if (j > cfg.maxj) {
        if (st.rrem[i] != 0) return true;
        const int rows_left = cfg.maxi - i; // rows i+1 .. maxi
        for (int c = 0; c <= cfg.maxj; ++c)
            if (st.srem[c] > rows_left) return true;
        return tptp_search(cfg, st, ctl, i + 1, 0, emit);
    }
    if (!ctl.tick()) return false;
    if (st.rrem[i] > cfg.maxj - j + 1) return true; // row budget cannot be met

    if (st.rrem[i] > 0 && st.srem[j] > 0 && copy_fits(cfg, st, i, j)) {
        mark_copy(cfg, st, i, j, 1);
        st.placed.push_back({i, j});
        --st.rrem[i];
        --st.srem[j];
        const bool cont = tptp_search(cfg, st, ctl, i, j + 1, emit);
        ++st.rrem[i];
        ++st.srem[j];
        st.placed.pop_back();
        mark_copy(cfg, st, i, j, 0);
        if (!cont) return false;
    }
    return tptp_search(cfg, st, ctl, i, j + 1, emit);
}

struct TptpTask {
    TptpState state;
    int i = 0, j = 0;
};

// Snapshots every state reachable after deciding the first `remaining`
// candidate cells, pruning exactly like tptp_search.
void tptp_frontier(const TptpConfig& cfg, TptpState& st, int i, int j, int remaining,
                   long long& nodes, std::vector<TptpTask>& out) {
    if (remaining == 0 || i > cfg.maxi) {
        out.push_back({st, i, j});
        return;
    }
    if (j > cfg.maxj) {
        if (st.rrem[i] != 0) return;
        const int rows_left = cfg.maxi - i;
        for (int c = 0; c <= cfg.maxj; ++c)
            if (st.srem[c] > rows_left) return;
        tptp_frontier(cfg, st, i + 1, 0, remaining, nodes, out);
        return;
    }
    ++nodes;
    if (st.rrem[i] > cfg.maxj - j + 1) return;
    if (st.rrem[i] > 0 && st.srem[j] > 0 && copy_fits(cfg, st, i, j)) {
        mark_copy(cfg, st, i, j, 1);
        st.placed.push_back({i, j});
        --st.rrem[i];
        --st.srem[j];
        tptp_frontier(cfg, st, i, j + 1, remaining - 1, nodes, out);
        ++st.rrem[i];
        ++st.srem[j];
        st.placed.pop_back();
        mark_copy(cfg, st, i, j, 0);
    }
    tptp_frontier(cfg, st, i, j + 1, remaining - 1, nodes, out);
}

struct TptpTaskResult {
    bool ran = false;
    long long nodes = 0;
    long long count = 0;
    std::vector<std::vector<Cell>> solutions;
    std::optional<std::vector<Cell>> first;
};

constexpr int kFrontierCells = 12;

template <typename T>
void atomic_min(std::atomic<T>& target, T value) {
    T cur = target.load();
    while (value < cur && !target.compare_exchange_weak(cur, value)) {
    }
}

} // namespace

TptpResult solve_tptp(const TptpInstance& inst, SolveMode mode, const SearchLimits& limits) {
    const int m = inst.dims.m, n = inst.dims.n;
    if (m <= 0 || n <= 0) throw MalformedInstanceError("grid dimensions must be positive");
    if (static_cast<int>(inst.target.r.size()) != m ||
        static_cast<int>(inst.target.s.size()) != n)
        throw MalformedInstanceError("projection lengths do not match grid dimensions");
    for (int v : inst.target.r)
        if (v < 0) throw MalformedInstanceError("negative row projection entry");
    for (int v : inst.target.s)
        if (v < 0) throw MalformedInstanceError("negative column projection entry");

    TptpResult res;
    auto reject = [&](std::string why) {
        res.status = SolveStatus::Infeasible;
        res.reason = std::move(why);
        if (mode == SolveMode::Count || mode == SolveMode::Enumerate) res.count = 0;
        return res;
    };

    const long long sum_r = std::accumulate(inst.target.r.begin(), inst.target.r.end(), 0LL);
    const long long sum_s = std::accumulate(inst.target.s.begin(), inst.target.s.end(), 0LL);
    if (sum_r != sum_s) return reject("row and column projection sums differ");

    const int h = inst.tile.height(), w = inst.tile.width();
    const int maxi = m - h, maxj = n - w;
    for (int i = 0; i < m; ++i)
        if (inst.target.r[i] > 0 && i > maxi)
            return reject("row " + std::to_string(i) + " cannot host a tile start");
    for (int j = 0; j < n; ++j)
        if (inst.target.s[j] > 0 && j > maxj)
            return reject("column " + std::to_string(j) + " cannot host a tile start");
    for (int i = 0; i <= maxi; ++i)
        if (inst.target.r[i] > 0 && inst.target.r[i] > maxj + 1)
            return reject("row " + std::to_string(i) + " demands more starts than fit");
    for (int j = 0; j <= maxj; ++j)
        if (inst.target.s[j] > 0 && inst.target.s[j] > maxi + 1)
            return reject("column " + std::to_string(j) + " demands more starts than fit");

    TptpConfig cfg{inst.dims, inst.tile.cells(), h, w, maxi, maxj};
    TptpState root{inst.target.r, inst.target.s,
                   std::vector<uint8_t>(static_cast<size_t>(m) * n, 0), {}};

    const long long max_sols = limits.max_solutions.value_or(-1);
    long long count = 0;
    std::vector<std::vector<Cell>> sols;
    std::optional<std::vector<Cell>> first;
    SearchControl ctl;
    apply_limits(ctl, limits);

    auto make_emit = [&](long long& cnt, std::vector<std::vector<Cell>>& solutions,
                         std::optional<std::vector<Cell>>& first_sol, SearchControl& control) {
        return [&, mode](const TptpState& st) -> bool {
            switch (mode) {
                case SolveMode::Decide:
                case SolveMode::Find:
                    first_sol = st.placed;
                    return false;
                case SolveMode::Count:
                    ++cnt;
                    if (max_sols >= 0 && cnt >= max_sols) {
                        control.limit_hit = true;
                        return false;
                    }
                    return true;
                case SolveMode::Enumerate:
                    solutions.push_back(st.placed);
                    ++cnt;
                    if (max_sols >= 0 && cnt >= max_sols) {
                        control.limit_hit = true;
                        return false;
                    }
                    return true;
            }
            return true;
        };
    };

    const long long total_cells =
        static_cast<long long>(maxi + 1) * (maxj >= 0 ? maxj + 1 : 0);
    const bool parallel =
        limits.jobs > 1 && !limits.limited() && total_cells > kFrontierCells;

    if (!parallel) {
        auto emit = make_emit(count, sols, first, ctl);
        tptp_search(cfg, root, ctl, 0, 0, emit);
        res.stats.nodes = ctl.nodes;
    } else {
        std::vector<TptpTask> tasks;
        long long frontier_nodes = 0;
        tptp_frontier(cfg, root, 0, 0, kFrontierCells, frontier_nodes, tasks);

        const bool stop_at_first = mode == SolveMode::Decide || mode == SolveMode::Find;
        std::atomic<long long> first_feasible{LLONG_MAX};
        std::atomic<size_t> next{0};
        std::vector<TptpTaskResult> results(tasks.size());

        auto worker = [&] {
            while (true) {
                const size_t t = next.fetch_add(1);
                if (t >= tasks.size()) break;
                if (stop_at_first &&
                    static_cast<long long>(t) > first_feasible.load()) continue;
                TptpTaskResult local;
                local.ran = true;
                SearchControl tctl;
                if (stop_at_first) {
                    tctl.skip_above = &first_feasible;
                    tctl.task_index = static_cast<long long>(t);
                }
                TptpState st = tasks[t].state;
                auto emit = make_emit(local.count, local.solutions, local.first, tctl);
                tptp_search(cfg, st, tctl, tasks[t].i, tasks[t].j, emit);
                local.nodes = tctl.nodes;
                if (stop_at_first && local.first)
                    atomic_min(first_feasible, static_cast<long long>(t));
                results[t] = std::move(local);
            }
        };
        std::vector<std::thread> pool;
        const int jobs = std::min(limits.jobs, 64);
        pool.reserve(jobs);
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();

        res.stats.nodes = frontier_nodes;
        for (size_t t = 0; t < tasks.size(); ++t) {
            res.stats.nodes += results[t].nodes;
            count += results[t].count;
            for (auto& s : results[t].solutions) sols.push_back(std::move(s));
            if (!first && results[t].first) first = results[t].first;
        }
    }

    if (first) {
        res.status = SolveStatus::Feasible;
        if (mode == SolveMode::Find)
            res.witness = Packing{inst.dims, *first};
        return res;
    }
    if (ctl.limit_hit) {
        res.status = SolveStatus::LimitExceeded;
        res.solutions = std::move(sols);
        std::sort(res.solutions.begin(), res.solutions.end());
        return res;
    }
    switch (mode) {
        case SolveMode::Decide:
        case SolveMode::Find:
            res.status = SolveStatus::Infeasible;
            break;
        case SolveMode::Count:
            res.count = count;
            res.status = count > 0 ? SolveStatus::Feasible : SolveStatus::Infeasible;
            break;
        case SolveMode::Enumerate:
            std::sort(sols.begin(), sols.end());
            res.solutions = std::move(sols);
            res.count = static_cast<long long>(res.solutions.size());
            res.status = res.solutions.empty() ? SolveStatus::Infeasible : SolveStatus::Feasible;
            break;
    }
    return res;
}

// ---------------------------------------------------------------------------
// 3-color search

namespace {

struct CtpState {
    std::array<std::vector<int>, 3> rrem, crem;
    std::vector<Color> values; // row-major
};

// Cells in column-major order; t encodes (y, x).
bool ctp_search(const ThreeColorInstance& inst, CtpState& st, SearchControl& ctl, int t,
                const std::function<bool(const CtpState&)>& emit) {
    if (t == inst.m * inst.n) return emit(st);
    if (!ctl.tick()) return false;
    const int y = t / inst.m;
    const int x = t % inst.m;
    const int row_cells_left = inst.n - 1 - y; // cells of row x after this one
    const int col_cells_left = inst.m - 1 - x;
    for (int c = 0; c < 3; ++c) {
        if (st.rrem[c][x] == 0 || st.crem[c][y] == 0) continue;
        --st.rrem[c][x];
        --st.crem[c][y];
        bool viable = true;
        for (int c2 = 0; c2 < 3 && viable; ++c2) {
            if (st.rrem[c2][x] > row_cells_left) viable = false;
            if (st.crem[c2][y] > col_cells_left) viable = false;
        }
        bool cont = true;
        if (viable) {
            st.values[static_cast<size_t>(x) * inst.n + y] = static_cast<Color>(c);
            cont = ctp_search(inst, st, ctl, t + 1, emit);
        }
        ++st.rrem[c][x];
        ++st.crem[c][y];
        if (!cont) return false;
    }
    return true;
}

} // namespace

ThreeColorResult solve_3ctp(const ThreeColorInstance& inst, SolveMode mode,
                            const SearchLimits& limits) {
    if (inst.m <= 0 || inst.n <= 0)
        throw MalformedInstanceError("matrix dimensions must be positive");
    for (int c = 0; c < 3; ++c) {
        if (static_cast<int>(inst.rows[c].size()) != inst.m ||
            static_cast<int>(inst.cols[c].size()) != inst.n)
            throw MalformedInstanceError("color projection lengths do not match dimensions");
        for (int v : inst.rows[c])
            if (v < 0) throw MalformedInstanceError("negative color row entry");
        for (int v : inst.cols[c])
            if (v < 0) throw MalformedInstanceError("negative color column entry");
    }

    ThreeColorResult res;
    auto reject = [&](std::string why) {
        res.status = SolveStatus::Infeasible;
        res.reason = std::move(why);
        if (mode == SolveMode::Count || mode == SolveMode::Enumerate) res.count = 0;
        return res;
    };
    for (int c = 0; c < 3; ++c) {
        const long long row_sum = std::accumulate(inst.rows[c].begin(), inst.rows[c].end(), 0LL);
        const long long col_sum = std::accumulate(inst.cols[c].begin(), inst.cols[c].end(), 0LL);
        if (row_sum != col_sum)
            return reject(std::string("color ") + color_letter(static_cast<Color>(c)) +
                          " row and column sums disagree");
    }
    for (int x = 0; x < inst.m; ++x) {
        if (inst.rows[0][x] + inst.rows[1][x] + inst.rows[2][x] != inst.n)
            return reject("row " + std::to_string(x) + " color counts do not sum to n");
    }
    for (int y = 0; y < inst.n; ++y) {
        if (inst.cols[0][y] + inst.cols[1][y] + inst.cols[2][y] != inst.m)
            return reject("column " + std::to_string(y) + " color counts do not sum to m");
    }

    CtpState st{inst.rows, inst.cols,
                std::vector<Color>(static_cast<size_t>(inst.m) * inst.n, Color::R)};
    SearchControl ctl;
    apply_limits(ctl, limits);
    const long long max_sols = limits.max_solutions.value_or(-1);
    long long count = 0;
    std::vector<ColorMatrix> sols;
    std::optional<ColorMatrix> first;

    auto emit = [&](const CtpState& state) -> bool {
        switch (mode) {
            case SolveMode::Decide:
            case SolveMode::Find:
                first = ColorMatrix{inst.m, inst.n, state.values};
                return false;
            case SolveMode::Count:
                ++count;
                if (max_sols >= 0 && count >= max_sols) {
                    ctl.limit_hit = true;
                    return false;
                }
                return true;
            case SolveMode::Enumerate:
                sols.push_back(ColorMatrix{inst.m, inst.n, state.values});
                ++count;
                if (max_sols >= 0 && count >= max_sols) {
                    ctl.limit_hit = true;
                    return false;
                }
                return true;
        }
        return true;
    };
    ctp_search(inst, st, ctl, 0, emit);
    res.stats.nodes = ctl.nodes;

    if (first) {
        res.status = SolveStatus::Feasible;
        if (mode == SolveMode::Find) res.witness = std::move(first);
        return res;
    }
    if (ctl.limit_hit) {
        res.status = SolveStatus::LimitExceeded;
        res.solutions = std::move(sols);
        std::sort(res.solutions.begin(), res.solutions.end(),
                  [](const ColorMatrix& a, const ColorMatrix& b) { return a.values < b.values; });
        return res;
    }
    switch (mode) {
        case SolveMode::Decide:
        case SolveMode::Find:
            res.status = SolveStatus::Infeasible;
            break;
        case SolveMode::Count:
            res.count = count;
            res.status = count > 0 ? SolveStatus::Feasible : SolveStatus::Infeasible;
            break;
        case SolveMode::Enumerate:
            std::sort(sols.begin(), sols.end(),
                      [](const ColorMatrix& a, const ColorMatrix& b) { return a.values < b.values; });
            res.solutions = std::move(sols);
            res.count = static_cast<long long>(res.solutions.size());
            res.status = res.solutions.empty() ? SolveStatus::Infeasible : SolveStatus::Feasible;
            break;
    }
    return res;
}

// ---------------------------------------------------------------------------
// Ryser reconstruction and the xi oracle

std::optional<std::vector<std::vector<int>>> ryser_single_cell(const std::vector<int>& r,
                                                               const std::vector<int>& s) {
    const int m = static_cast<int>(r.size());
    const int n = static_cast<int>(s.size());
    long long sum_r = 0, sum_s = 0;
    for (int v : r) {
        if (v < 0 || v > n) return std::nullopt;
        sum_r += v;
    }
    for (int v : s) {
        if (v < 0 || v > m) return std::nullopt;
        sum_s += v;
    }
    if (sum_r != sum_s) return std::nullopt;

    std::vector<int> row_order(m);
    std::iota(row_order.begin(), row_order.end(), 0);
    std::stable_sort(row_order.begin(), row_order.end(),
                     [&](int a, int b) { return r[a] > r[b]; });

    std::vector<std::vector<int>> matrix(m, std::vector<int>(n, 0));
    std::vector<int> srem = s;
    std::vector<int> col_order(n);
    for (int row : row_order) {
        std::iota(col_order.begin(), col_order.end(), 0);
        std::stable_sort(col_order.begin(), col_order.end(),
                         [&](int a, int b) { return srem[a] > srem[b]; });
        for (int t = 0; t < r[row]; ++t) {
            const int col = col_order[t];
            if (srem[col] == 0) return std::nullopt;
            matrix[row][col] = 1;
            --srem[col];
        }
    }
    return matrix;
}

namespace {

void xi_branch(const std::vector<Cell>& cands, const ConflictProfile& profile, size_t idx,
               std::vector<Cell>& chosen, int& best) {
    if (static_cast<int>(chosen.size() + (cands.size() - idx)) <= best) return;
    if (idx == cands.size()) {
        best = std::max(best, static_cast<int>(chosen.size()));
        return;
    }
    const Cell c = cands[idx];
    bool compatible = true;
    for (const Cell& u : chosen) {
        if (profile.contains({c.row - u.row, c.col - u.col})) {
            compatible = false;
            break;
        }
    }
    if (compatible) {
        chosen.push_back(c);
        xi_branch(cands, profile, idx + 1, chosen, best);
        chosen.pop_back();
    }
    xi_branch(cands, profile, idx + 1, chosen, best);
}

std::vector<int> checked_index_set(const std::vector<int>& xs, int bound, const char* what) {
    std::vector<int> out = xs;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (int v : out)
        if (v < 0 || v >= bound)
            throw IndexOutOfRangeError(std::string(what) + " index " + std::to_string(v) +
                                       " outside [0," + std::to_string(bound) + ")");
    return out;
}

} // namespace

int xi(const Tile& tile, GridDims dims, const std::vector<int>& row_set,
       const std::vector<int>& col_set) {
    const std::vector<int> rows = checked_index_set(row_set, dims.m, "row");
    const std::vector<int> cols = checked_index_set(col_set, dims.n, "column");

    std::vector<Cell> cands;
    for (int i : rows) {
        if (i > dims.m - tile.height()) continue;
        for (int j : cols) {
            if (j > dims.n - tile.width()) continue;
            cands.push_back({i, j});
        }
    }
    const ConflictProfile profile = conflict_profile(tile);
    int best = 0;
    std::vector<Cell> chosen;
    xi_branch(cands, profile, 0, chosen, best);
    return best;
}

} // namespace tilepack
