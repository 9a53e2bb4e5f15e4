#include "tilepack/reduction.hpp"

#include <algorithm>
#include <numeric>

namespace tilepack {

std::string case_name(CaseTag tag) {
    switch (tag) {
        case CaseTag::Case1: return "case1";
        case CaseTag::Case2: return "case2";
        case CaseTag::Case3: return "case3";
        case CaseTag::Case4: return "case4";
    }
    return "?";
}

Classification classify(const Tile& tile) {
    if (is_bar(tile)) throw BarTileError("the reduction is defined for non-bar tiles only");

    const MaxConflict mc = select_max_conflict(tile);
    Classification cls;
    cls.p = mc.p;
    cls.q = mc.q;
    cls.transform = mc.transform;
    cls.normalized = apply_transform(tile, cls.transform);

    AxisMultiples ab = compute_ab(cls.normalized, cls.p, cls.q);
    if (ab.a > ab.b) {
        // Exchange the roles of rows and columns.
        cls.transform.transpose = true;
        cls.normalized = apply_transform(tile, cls.transform);
        std::swap(cls.p, cls.q);
        std::swap(ab.a, ab.b);
    }
    cls.a = ab.a;
    cls.b = ab.b;

    if (cls.a == 1 && cls.b == 1) {
        cls.tag = CaseTag::Case1;
    } else if (cls.a == 1) {
        cls.tag = CaseTag::Case2;
    } else if (cls.a == 2 && cls.b == 2 && is_conflicting(cls.normalized, {cls.p, cls.q})) {
        cls.tag = CaseTag::Case3;
    } else {
        cls.tag = CaseTag::Case4;
        if (is_conflicting(cls.normalized, {cls.p, (cls.b - 1) * cls.q}))
            throw InternalInconsistencyError(
                "(p,(b-1)q) conflicts for a tile classified as the remaining case");
    }
    return cls;
}

BlockGadget build_gadget(const Tile& normalized, CaseTag tag, int p, int q, int a, int b) {
    switch (tag) {
        case CaseTag::Case1:
            if (a != 1 || b != 1)
                throw InternalInconsistencyError("case1 requires a = b = 1");
            break;
        case CaseTag::Case2:
            if (a != 1 || b < 2)
                throw InternalInconsistencyError("case2 requires a = 1, b >= 2");
            break;
        case CaseTag::Case3:
        case CaseTag::Case4:
            if (a < 2 || b < a)
                throw InternalInconsistencyError("cases 3 and 4 require 2 <= a <= b");
            break;
    }

    BlockGadget g;
    switch (tag) {
        case CaseTag::Case1:
            g.packings = {std::vector<Cell>{{p, 0}, {p, q}},
                          std::vector<Cell>{{0, q}, {p, q}},
                          std::vector<Cell>{{p, q}}};
            break;
        case CaseTag::Case2:
            g.packings = {std::vector<Cell>{{2 * p, 0}, {2 * p, b * q}, {p, 0}},
                          std::vector<Cell>{{2 * p, 0}, {2 * p, b * q}, {0, q}},
                          std::vector<Cell>{{2 * p, 0}, {2 * p, b * q}}};
            break;
        case CaseTag::Case3:
            g.packings = {std::vector<Cell>{{0, 2 * q}, {p, 0}, {2 * p, 2 * q}},
                          std::vector<Cell>{{0, q}, {2 * p, 0}, {2 * p, 2 * q}},
                          std::vector<Cell>{{0, 0}, {0, 2 * q}, {2 * p, 0}, {2 * p, 2 * q}}};
            break;
        case CaseTag::Case4:
            g.packings = {std::vector<Cell>{{p, 0}, {p, b * q}},
                          std::vector<Cell>{{0, q}, {p, b * q}},
                          std::vector<Cell>{{p, b * q}}};
            break;
    }

    int max_row = 0, max_col = 0;
    for (auto& pack : g.packings) {
        std::sort(pack.begin(), pack.end());
        for (const Cell& c : pack) {
            max_row = std::max(max_row, c.row);
            max_col = std::max(max_col, c.col);
        }
    }
    g.k = normalized.height() + max_row;
    g.l = normalized.width() + max_col;

    for (int c = 0; c < 3; ++c) {
        const ValidityReport rep = validate_packing(normalized, {g.k, g.l}, g.packings[c]);
        if (!rep.ok())
            throw InternalInconsistencyError("block packing D^" +
                                             std::string(1, color_letter(static_cast<Color>(c))) +
                                             " is invalid: " + rep.message());
        const ProjectionPair pp = projections({g.k, g.l}, g.packings[c]);
        g.row_proj[c] = pp.r;
        g.col_proj[c] = pp.s;
    }
    return g;
}

// ---------------------------------------------------------------------------
// Frame maps

namespace {

// Reverses v[0..last] in place, leaving the tail untouched. The tail of any
// projection vector achievable by a packing is zero, so the split reflection
// is a bijection on achievable instances and an involution on all vectors.
void reflect_prefix(std::vector<int>& v, int last) {
    if (last < 0) return;
    std::reverse(v.begin(), v.begin() + std::min<size_t>(v.size(), last + 1));
}

} // namespace

Packing to_normalized_frame(const Packing& packing, const Transform& tr, const Tile& original) {
    int m = packing.dims.m, n = packing.dims.n;
    std::vector<Cell> pos = packing.positions;
    if (tr.vflip)
        for (Cell& c : pos) c.row = m - original.height() - c.row;
    if (tr.hflip)
        for (Cell& c : pos) c.col = n - original.width() - c.col;
    if (tr.transpose) {
        for (Cell& c : pos) std::swap(c.row, c.col);
        std::swap(m, n);
    }
    std::sort(pos.begin(), pos.end());
    return {{m, n}, std::move(pos)};
}

Packing to_original_frame(const Packing& packing, const Transform& tr, const Tile& original) {
    int m = packing.dims.m, n = packing.dims.n;
    std::vector<Cell> pos = packing.positions;
    if (tr.transpose) {
        for (Cell& c : pos) std::swap(c.row, c.col);
        std::swap(m, n);
    }
    if (tr.hflip)
        for (Cell& c : pos) c.col = n - original.width() - c.col;
    if (tr.vflip)
        for (Cell& c : pos) c.row = m - original.height() - c.row;
    std::sort(pos.begin(), pos.end());
    return {{m, n}, std::move(pos)};
}

ProjectionPair to_normalized_frame(const ProjectionPair& pp, const Transform& tr,
                                   const Tile& original) {
    ProjectionPair out = pp;
    if (tr.vflip) reflect_prefix(out.r, static_cast<int>(out.r.size()) - original.height());
    if (tr.hflip) reflect_prefix(out.s, static_cast<int>(out.s.size()) - original.width());
    if (tr.transpose) std::swap(out.r, out.s);
    return out;
}

ProjectionPair to_original_frame(const ProjectionPair& pp, const Transform& tr,
                                 const Tile& original) {
    ProjectionPair out = pp;
    if (tr.transpose) std::swap(out.r, out.s);
    if (tr.hflip) reflect_prefix(out.s, static_cast<int>(out.s.size()) - original.width());
    if (tr.vflip) reflect_prefix(out.r, static_cast<int>(out.r.size()) - original.height());
    return out;
}

// ---------------------------------------------------------------------------
// The reduction proper

namespace {

bool preconditions_hold(const ThreeColorInstance& inst) {
    for (int c = 0; c < 3; ++c) {
        const long long rs = std::accumulate(inst.rows[c].begin(), inst.rows[c].end(), 0LL);
        const long long cs = std::accumulate(inst.cols[c].begin(), inst.cols[c].end(), 0LL);
        if (rs != cs) return false;
    }
    for (int x = 0; x < inst.m; ++x)
        if (inst.rows[0][x] + inst.rows[1][x] + inst.rows[2][x] != inst.n) return false;
    for (int y = 0; y < inst.n; ++y)
        if (inst.cols[0][y] + inst.cols[1][y] + inst.cols[2][y] != inst.m) return false;
    return true;
}

void check_instance_shape(const ThreeColorInstance& inst) {
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
}

} // namespace

ReductionResult reduce(const ThreeColorInstance& inst, const Tile& tile) {
    check_instance_shape(inst);
    const Classification cls = classify(tile);
    BlockGadget gadget = build_gadget(cls.normalized, cls.tag, cls.p, cls.q, cls.a, cls.b);

    ReductionCertificate cert;
    cert.tile = tile;
    cert.transform = cls.transform;
    cert.normalized = cls.normalized;
    cert.p = cls.p;
    cert.q = cls.q;
    cert.a = cls.a;
    cert.b = cls.b;
    cert.tag = cls.tag;
    cert.gadget = std::move(gadget);
    cert.source_m = inst.m;
    cert.source_n = inst.n;
    cert.reduced_m = inst.m * cert.gadget.k;
    cert.reduced_n = inst.n * cert.gadget.l;

    if (!preconditions_hold(inst)) {
        cert.source_infeasible = true;
        ProjectionPair target{std::vector<int>(tile.height(), 0),
                              std::vector<int>(tile.width(), 0)};
        target.r[0] = 1; // sum mismatch: unsatisfiable for every tile
        TptpInstance out{tile, {tile.height(), tile.width()}, std::move(target)};
        return {std::move(out), std::move(cert)};
    }

    const int k = cert.gadget.k, l = cert.gadget.l;
    ProjectionPair normalized_target{std::vector<int>(cert.reduced_m, 0),
                                     std::vector<int>(cert.reduced_n, 0)};
    for (int x = 0; x < inst.m; ++x)
        for (int i = 0; i < k; ++i) {
            int v = 0;
            for (int c = 0; c < 3; ++c) v += inst.rows[c][x] * cert.gadget.row_proj[c][i];
            normalized_target.r[static_cast<size_t>(x) * k + i] = v;
        }
    for (int y = 0; y < inst.n; ++y)
        for (int j = 0; j < l; ++j) {
            int v = 0;
            for (int c = 0; c < 3; ++c) v += inst.cols[c][y] * cert.gadget.col_proj[c][j];
            normalized_target.s[static_cast<size_t>(y) * l + j] = v;
        }

    const ProjectionPair target = to_original_frame(normalized_target, cert.transform, tile);
    GridDims dims{cert.reduced_m, cert.reduced_n};
    if (cert.transform.transpose) std::swap(dims.m, dims.n);
    TptpInstance out{tile, dims, target};
    return {std::move(out), std::move(cert)};
}

Packing lift_solution(const ColorMatrix& matrix, const ReductionCertificate& cert) {
    if (cert.source_infeasible)
        throw DimensionMismatchError(
            "certificate marks the source instance infeasible; no lift exists");
    if (matrix.m != cert.source_m || matrix.n != cert.source_n)
        throw DimensionMismatchError("matrix is " + std::to_string(matrix.m) + "x" +
                                     std::to_string(matrix.n) + ", certificate expects " +
                                     std::to_string(cert.source_m) + "x" +
                                     std::to_string(cert.source_n));
    const int k = cert.gadget.k, l = cert.gadget.l;
    std::vector<Cell> pos;
    for (int x = 0; x < matrix.m; ++x)
        for (int y = 0; y < matrix.n; ++y)
            for (const Cell& d : cert.gadget.packings[static_cast<int>(matrix.at(x, y))])
                pos.push_back({x * k + d.row, y * l + d.col});
    std::sort(pos.begin(), pos.end());
    Packing normalized{{cert.reduced_m, cert.reduced_n}, std::move(pos)};
    return to_original_frame(normalized, cert.transform, cert.tile);
}

std::vector<ProjectionPair> block_projections(const Packing& normalized, int k, int l,
                                              int blocks_m, int blocks_n) {
    std::vector<ProjectionPair> out(static_cast<size_t>(blocks_m) * blocks_n,
                                    ProjectionPair{std::vector<int>(k, 0), std::vector<int>(l, 0)});
    for (const Cell& c : normalized.positions) {
        const int bx = c.row / k, by = c.col / l;
        if (bx < 0 || bx >= blocks_m || by < 0 || by >= blocks_n)
            throw IndexOutOfRangeError("start position outside the block grid");
        ProjectionPair& pp = out[static_cast<size_t>(bx) * blocks_n + by];
        ++pp.r[c.row % k];
        ++pp.s[c.col % l];
    }
    return out;
}

ColorMatrix project_solution(const Packing& packing, const ReductionCertificate& cert) {
    if (cert.source_infeasible)
        throw DimensionMismatchError(
            "certificate marks the source instance infeasible; no packing projects back");
    GridDims expected{cert.reduced_m, cert.reduced_n};
    if (cert.transform.transpose) std::swap(expected.m, expected.n);
    if (packing.dims != expected)
        throw DimensionMismatchError("packing grid does not match the reduced instance");

    const Packing normalized = to_normalized_frame(packing, cert.transform, cert.tile);
    const int k = cert.gadget.k, l = cert.gadget.l;
    const std::vector<ProjectionPair> blocks =
        block_projections(normalized, k, l, cert.source_m, cert.source_n);

    ColorMatrix matrix{cert.source_m, cert.source_n,
                       std::vector<Color>(static_cast<size_t>(cert.source_m) * cert.source_n,
                                          Color::R)};
    for (int x = 0; x < cert.source_m; ++x)
        for (int y = 0; y < cert.source_n; ++y) {
            const ProjectionPair& local = blocks[static_cast<size_t>(x) * cert.source_n + y];
            bool matched = false;
            for (int c = 0; c < 3 && !matched; ++c) {
                if (local.r == cert.gadget.row_proj[c] && local.s == cert.gadget.col_proj[c]) {
                    matrix.at(x, y) = static_cast<Color>(c);
                    matched = true;
                }
            }
            if (!matched)
                throw UnrecognizedBlockError("block (" + std::to_string(x) + "," +
                                             std::to_string(y) +
                                             ") has projections matching no color");
        }
    return matrix;
}

} // namespace tilepack
