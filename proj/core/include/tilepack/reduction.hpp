#pragma once

#include <string>

#include "tilepack/solver.hpp"

namespace tilepack {

// The four gadget constructions, selected by (a, b) and whether (p, q)
// conflicts for the normalized tile.
enum class CaseTag { Case1, Case2, Case3, Case4 };
std::string case_name(CaseTag tag); // "case1" .. "case4"

struct Classification {
    CaseTag tag = CaseTag::Case1;
    int p = 0, q = 0, a = 0, b = 0;
    Transform transform; // includes a transpose when needed to make a <= b
    Tile normalized;     // apply_transform(tile, transform)
};

// Orientation normalization and case selection for a non-bar tile. Throws
// BarTileError.
Classification classify(const Tile& tile);

// The three block packings encoding the colors, on the smallest k x l block
// that contains them, with their projections.
struct BlockGadget {
    std::array<std::vector<Cell>, 3> packings; // D^R, D^G, D^B, sorted
    int k = 0, l = 0;
    std::array<std::vector<int>, 3> row_proj;  // length k, indexed by Color
    std::array<std::vector<int>, 3> col_proj;  // length l
};

// Emits the case's position sets and validates each as a packing of the
// normalized tile; a validation failure indicates a classification bug and
// throws InternalInconsistencyError.
BlockGadget build_gadget(const Tile& normalized, CaseTag tag, int p, int q, int a, int b);

// Everything needed to invert the reduction: the original tile and its
// normalization, the parameters, the gadget, and the source/target shapes.
// reduced_m/reduced_n are the normalized-frame grid dims (source_m*k,
// source_n*l); the emitted instance lives in the original tile's frame, so
// its grid is transposed relative to these when the transform transposes.
struct ReductionCertificate {
    Tile tile;
    Transform transform;
    Tile normalized;
    int p = 0, q = 0, a = 0, b = 0;
    CaseTag tag = CaseTag::Case1;
    BlockGadget gadget;
    int source_m = 0, source_n = 0;
    int reduced_m = 0, reduced_n = 0;
    bool source_infeasible = false;
};

struct ReductionResult {
    TptpInstance instance;
    ReductionCertificate certificate;
};

// Maps a 3-color instance to a tile-packing instance with the same
// satisfiability. When the source's feasibility preconditions fail, returns
// the canonical infeasible instance (r = (1,0,...,0) over h rows, s = zeros
// over w columns) flagged in the certificate. Throws BarTileError.
ReductionResult reduce(const ThreeColorInstance& inst, const Tile& tile);

// Forward solution map: places the color's block packing in every block and
// frame-maps the union back to the original tile. Throws
// DimensionMismatchError (also on the canonical-infeasible branch, where no
// lift exists).
Packing lift_solution(const ColorMatrix& matrix, const ReductionCertificate& cert);

// Backward solution map: classifies every block of the packing by its local
// projection pair. A block matching no color throws UnrecognizedBlockError —
// that is a genuine Requirement-2 violation and is surfaced, never patched.
ColorMatrix project_solution(const Packing& packing, const ReductionCertificate& cert);

// Frame maps realize the orientation normalization at the instance level: a
// bijection between packings (and projection pairs) of the original tile and
// of the normalized tile under the grid symmetry of the transform. Start
// positions map i -> m' - h - i under vflip and j -> n' - w - j under hflip;
// transpose swaps coordinates and r/s.
Packing to_normalized_frame(const Packing& packing, const Transform& tr, const Tile& original);
Packing to_original_frame(const Packing& packing, const Transform& tr, const Tile& original);
ProjectionPair to_normalized_frame(const ProjectionPair& pp, const Transform& tr,
                                   const Tile& original);
ProjectionPair to_original_frame(const ProjectionPair& pp, const Transform& tr,
                                 const Tile& original);

// Local projections of every k x l block of a normalized-frame packing,
// indexed block-row-major.
std::vector<ProjectionPair> block_projections(const Packing& normalized, int k, int l,
                                              int blocks_m, int blocks_n);

} // namespace tilepack
