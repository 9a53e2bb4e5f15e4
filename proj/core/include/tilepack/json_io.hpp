#pragma once

#include <string>
#include <vector>

#include "tilepack/verify.hpp"

// String-level (de)serialization for every wire schema. The core headers stay
// free of the JSON library; parse failures throw ParseError.
namespace tilepack {

Tile tile_from_json(const std::string& text);
std::string tile_to_json(const Tile& tile);

Packing packing_from_json(const std::string& text);
std::string packing_to_json(const Packing& packing);

ProjectionPair projections_from_json(const std::string& text);
std::string projections_to_json(const ProjectionPair& pp);

TptpInstance tptp_instance_from_json(const std::string& text);
std::string tptp_instance_to_json(const TptpInstance& inst);

ThreeColorInstance three_color_instance_from_json(const std::string& text);
std::string three_color_instance_to_json(const ThreeColorInstance& inst);

ColorMatrix color_matrix_from_json(const std::string& text);
std::string color_matrix_to_json(const ColorMatrix& matrix);

ReductionCertificate certificate_from_json(const std::string& text);
std::string certificate_to_json(const ReductionCertificate& cert);

std::string validity_report_to_json(const ValidityReport& report);
std::string verification_report_to_json(const VerificationReport& report);
std::string tptp_result_to_json(const TptpResult& result, SolveMode mode);
std::string three_color_result_to_json(const ThreeColorResult& result, SolveMode mode);

std::string classification_to_json(const Classification& cls);
std::string gadget_to_json(const Classification& cls, const BlockGadget& gadget);
std::string tile_info_to_json(const Tile& tile);
std::string conflict_profile_to_json(const ConflictProfile& profile);
std::string tile_list_to_json(const std::vector<Tile>& tiles);

} // namespace tilepack
