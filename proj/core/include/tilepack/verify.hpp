#pragma once

#include <map>
#include <optional>
#include <string>

#include "tilepack/reduction.hpp"

namespace tilepack {

// Picks the listed coordinates of v, in order. Throws IndexOutOfRangeError
// for out-of-range or repeated indices.
std::vector<int> restriction(const std::vector<int>& v, const std::vector<int>& indices);

// Exact integer test: the vectors augmented with a trailing 1 have full rank,
// computed by fraction-free elimination. Throws DimensionMismatchError when
// lengths differ or the list is empty.
bool affinely_independent(const std::vector<std::vector<long long>>& vectors);

// Both projection triples of the gadget are affinely independent. Checked on
// the full block vectors; coordinate restrictions are a proof device only.
bool check_requirement1(const BlockGadget& gadget);

struct VerificationReport {
    enum class Status { Holds, DoesNotHold, HypothesisNotMet, Inconclusive };
    Status status = Status::Holds;
    std::string detail;
    std::optional<Packing> witness;     // counterexample packing, original frame
    std::optional<Cell> witness_block;  // offending block (x, y)
    // Block signatures seen across all enumerated packings: "R"/"G"/"B" for
    // the gadget colors, the serialized local projections otherwise. The
    // lambda counts of the case analyses are exactly these tallies.
    std::map<std::string, long long> signature_counts;
    long long packings_examined = 0;
    bool holds() const { return status == Status::Holds; }
};

std::string signature_key(const std::vector<int>& local_r, const std::vector<int>& local_s);

// Enumerates every packing with the reduced projections and checks that each
// block's local projections equal some color's. Limit-exceeded enumeration is
// reported inconclusive, never as holding.
VerificationReport check_requirement2(const TptpInstance& inst, const ReductionCertificate& cert,
                                      const SearchLimits& limits = {});

// Instantiates the adapted Ryser lemma: when r(I) - s(Jbar) = xi, every
// packing with these projections has exactly xi starts in I x J and none in
// the complement product. Hypothesis failures are reported as such.
VerificationReport check_ryser_lemma(const Tile& tile, GridDims dims,
                                     const std::vector<int>& row_set,
                                     const std::vector<int>& col_set, const ProjectionPair& pp,
                                     const SearchLimits& limits = {});

// Decides the source and the reduced instance independently and compares;
// on feasible instances additionally round-trips a witness through
// lift_solution and project_solution.
VerificationReport check_equisat(const ThreeColorInstance& inst, const Tile& tile,
                                 const SearchLimits& limits = {});

} // namespace tilepack
