#include "tilepack/verify.hpp"

#include <algorithm>
#include <numeric>

namespace tilepack {

std::vector<int> restriction(const std::vector<int>& v, const std::vector<int>& indices) {
    std::vector<int> out;
    out.reserve(indices.size());
    std::vector<uint8_t> seen(v.size(), 0);
    for (int idx : indices) {
        if (idx < 0 || idx >= static_cast<int>(v.size()))
            throw IndexOutOfRangeError("restriction index " + std::to_string(idx) +
                                       " outside [0," + std::to_string(v.size()) + ")");
        if (seen[idx])
            throw IndexOutOfRangeError("restriction index " + std::to_string(idx) + " repeated");
        seen[idx] = 1;
        out.push_back(v[idx]);
    }
    return out;
}

namespace {

// Fraction-free (Bareiss) elimination; entries stay exact minors of the
// input, so the division below is exact.
int integer_rank(std::vector<std::vector<long long>> a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    int rank = 0;
    long long prev = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c) {
                const __int128 num = static_cast<__int128>(a[rank][col]) * a[r][c] -
                                     static_cast<__int128>(a[r][col]) * a[rank][c];
                if (num % prev != 0)
                    throw InternalInconsistencyError("fraction-free elimination lost exactness");
                a[r][c] = static_cast<long long>(num / prev);
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

} // namespace

bool affinely_independent(const std::vector<std::vector<long long>>& vectors) {
    if (vectors.empty()) throw DimensionMismatchError("need at least one vector");
    const size_t len = vectors[0].size();
    std::vector<std::vector<long long>> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.size() != len) throw DimensionMismatchError("vectors have different lengths");
        std::vector<long long> row = v;
        row.push_back(1);
        rows.push_back(std::move(row));
    }
    return integer_rank(std::move(rows)) == static_cast<int>(vectors.size());
}

bool check_requirement1(const BlockGadget& gadget) {
    auto widen = [](const std::array<std::vector<int>, 3>& triple) {
        std::vector<std::vector<long long>> out;
        for (const auto& v : triple) out.emplace_back(v.begin(), v.end());
        return out;
    };
    return affinely_independent(widen(gadget.row_proj)) &&
           affinely_independent(widen(gadget.col_proj));
}

std::string signature_key(const std::vector<int>& local_r, const std::vector<int>& local_s) {
    std::string key = "r=";
    for (size_t i = 0; i < local_r.size(); ++i)
        key += (i ? "," : "") + std::to_string(local_r[i]);
    key += ";s=";
    for (size_t i = 0; i < local_s.size(); ++i)
        key += (i ? "," : "") + std::to_string(local_s[i]);
    return key;
}

VerificationReport check_requirement2(const TptpInstance& inst, const ReductionCertificate& cert,
                                      const SearchLimits& limits) {
    VerificationReport rep;
    const TptpResult res = solve_tptp(inst, SolveMode::Enumerate, limits);
    if (res.status == SolveStatus::LimitExceeded) {
        rep.status = VerificationReport::Status::Inconclusive;
        rep.detail = "enumeration exceeded the search limits";
        return rep;
    }
    rep.packings_examined = static_cast<long long>(res.solutions.size());

    const int k = cert.gadget.k, l = cert.gadget.l;
    for (const std::vector<Cell>& positions : res.solutions) {
        const Packing packing{inst.dims, positions};
        const Packing normalized = to_normalized_frame(packing, cert.transform, cert.tile);
        const std::vector<ProjectionPair> blocks =
            block_projections(normalized, k, l, cert.source_m, cert.source_n);
        for (int x = 0; x < cert.source_m; ++x)
            for (int y = 0; y < cert.source_n; ++y) {
                const ProjectionPair& local = blocks[static_cast<size_t>(x) * cert.source_n + y];
                std::string key;
                for (int c = 0; c < 3; ++c)
                    if (local.r == cert.gadget.row_proj[c] && local.s == cert.gadget.col_proj[c]) {
                        key = std::string(1, color_letter(static_cast<Color>(c)));
                        break;
                    }
                if (key.empty()) {
                    key = signature_key(local.r, local.s);
                    if (rep.status == VerificationReport::Status::Holds) {
                        rep.status = VerificationReport::Status::DoesNotHold;
                        rep.detail = "block (" + std::to_string(x) + "," + std::to_string(y) +
                                     ") has projections " + key + " matching no color";
                        rep.witness = packing;
                        rep.witness_block = Cell{x, y};
                    }
                }
                ++rep.signature_counts[key];
            }
    }
    if (rep.status == VerificationReport::Status::Holds)
        rep.detail = "all blocks of all " + std::to_string(rep.packings_examined) +
                     " packings match a gadget color";
    return rep;
}

VerificationReport check_ryser_lemma(const Tile& tile, GridDims dims,
                                     const std::vector<int>& row_set,
                                     const std::vector<int>& col_set, const ProjectionPair& pp,
                                     const SearchLimits& limits) {
    if (static_cast<int>(pp.r.size()) != dims.m || static_cast<int>(pp.s.size()) != dims.n)
        throw MalformedInstanceError("projection lengths do not match grid dimensions");
    std::vector<uint8_t> in_rows(dims.m, 0), in_cols(dims.n, 0);
    for (int i : row_set) {
        if (i < 0 || i >= dims.m) throw IndexOutOfRangeError("row index outside the grid");
        in_rows[i] = 1;
    }
    for (int j : col_set) {
        if (j < 0 || j >= dims.n) throw IndexOutOfRangeError("column index outside the grid");
        in_cols[j] = 1;
    }

    VerificationReport rep;
    const int bound = xi(tile, dims, row_set, col_set);
    long long r_of_I = 0, s_of_Jbar = 0;
    for (int i = 0; i < dims.m; ++i)
        if (in_rows[i]) r_of_I += pp.r[i];
    for (int j = 0; j < dims.n; ++j)
        if (!in_cols[j]) s_of_Jbar += pp.s[j];

    if (r_of_I - s_of_Jbar != bound) {
        rep.status = VerificationReport::Status::HypothesisNotMet;
        rep.detail = "r(I) - s(Jbar) = " + std::to_string(r_of_I - s_of_Jbar) +
                     " differs from xi = " + std::to_string(bound);
        return rep;
    }

    const TptpResult res = solve_tptp({tile, dims, pp}, SolveMode::Enumerate, limits);
    if (res.status == SolveStatus::LimitExceeded) {
        rep.status = VerificationReport::Status::Inconclusive;
        rep.detail = "enumeration exceeded the search limits";
        return rep;
    }
    rep.packings_examined = static_cast<long long>(res.solutions.size());
    for (const std::vector<Cell>& positions : res.solutions) {
        long long in_product = 0, in_complement = 0;
        for (const Cell& c : positions) {
            if (in_rows[c.row] && in_cols[c.col]) ++in_product;
            if (!in_rows[c.row] && !in_cols[c.col]) ++in_complement;
        }
        if (in_product != bound || in_complement != 0) {
            rep.status = VerificationReport::Status::DoesNotHold;
            rep.detail = "packing has " + std::to_string(in_product) + " starts in IxJ (xi = " +
                         std::to_string(bound) + ") and " + std::to_string(in_complement) +
                         " in the complement product";
            rep.witness = Packing{dims, positions};
            return rep;
        }
    }
    rep.detail = "xi = " + std::to_string(bound) + "; verified over " +
                 std::to_string(rep.packings_examined) + " packings";
    return rep;
}

VerificationReport check_equisat(const ThreeColorInstance& inst, const Tile& tile,
                                 const SearchLimits& limits) {
    VerificationReport rep;
    const ReductionResult red = reduce(inst, tile);

    const ThreeColorResult source = solve_3ctp(inst, SolveMode::Find, limits);
    if (source.status == SolveStatus::LimitExceeded) {
        rep.status = VerificationReport::Status::Inconclusive;
        rep.detail = "source search exceeded the limits";
        return rep;
    }
    const TptpResult reduced = solve_tptp(red.instance, SolveMode::Find, limits);
    if (reduced.status == SolveStatus::LimitExceeded) {
        rep.status = VerificationReport::Status::Inconclusive;
        rep.detail = "reduced search exceeded the limits";
        return rep;
    }

    if (source.status != reduced.status) {
        rep.status = VerificationReport::Status::DoesNotHold;
        rep.detail = std::string("source is ") +
                     (source.status == SolveStatus::Feasible ? "feasible" : "infeasible") +
                     " but the reduced instance is " +
                     (reduced.status == SolveStatus::Feasible ? "feasible" : "infeasible");
        if (reduced.witness) rep.witness = reduced.witness;
        return rep;
    }
    if (source.status == SolveStatus::Infeasible) {
        rep.detail = "both instances are infeasible";
        return rep;
    }

    // Round-trip the source witness through the solution maps.
    const ColorMatrix& matrix = *source.witness;
    const Packing lifted = lift_solution(matrix, red.certificate);
    const ValidityReport validity = validate_packing(tile, lifted.dims, lifted.positions);
    if (!validity.ok()) {
        rep.status = VerificationReport::Status::DoesNotHold;
        rep.detail = "lifted witness is not a valid packing: " + validity.message();
        rep.witness = lifted;
        return rep;
    }
    if (projections(lifted.dims, lifted.positions) != red.instance.target) {
        rep.status = VerificationReport::Status::DoesNotHold;
        rep.detail = "lifted witness misses the reduced projections";
        rep.witness = lifted;
        return rep;
    }
    try {
        const ColorMatrix back = project_solution(lifted, red.certificate);
        if (!(back == matrix)) {
            rep.status = VerificationReport::Status::DoesNotHold;
            rep.detail = "witness does not survive the lift/project round trip";
            rep.witness = lifted;
            return rep;
        }
    } catch (const UnrecognizedBlockError& e) {
        rep.status = VerificationReport::Status::DoesNotHold;
        rep.detail = std::string("lifted witness has an unrecognized block: ") + e.what();
        rep.witness = lifted;
        return rep;
    }
    rep.detail = "both instances are feasible; witness round trip succeeded";
    return rep;
}

} // namespace tilepack
