#include "tilepack/json_io.hpp"

#include <algorithm>

#include <json.hpp>

namespace tilepack {
namespace {

using nlohmann::json;

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

int require_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw ParseError(std::string("missing or non-integer field \"") + key + "\"");
    return j[key].get<int>();
}

bool require_bool(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_boolean())
        throw ParseError(std::string("missing or non-boolean field \"") + key + "\"");
    return j[key].get<bool>();
}

std::vector<int> int_vector(const json& j, const std::string& what) {
    if (!j.is_array()) throw ParseError(what + " must be an array");
    std::vector<int> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ParseError(what + " must contain integers");
        out.push_back(v.get<int>());
    }
    return out;
}

std::vector<Cell> cell_list(const json& j, const std::string& what) {
    if (!j.is_array()) throw ParseError(what + " must be an array of [row,col] pairs");
    std::vector<Cell> out;
    out.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw ParseError(what + " entries must be [row,col] integer pairs");
        out.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return out;
}

json cells_json(const std::vector<Cell>& cells) {
    json arr = json::array();
    for (const Cell& c : cells) arr.push_back({c.row, c.col});
    return arr;
}

json transform_json(const Transform& tr) {
    return {{"vflip", tr.vflip}, {"hflip", tr.hflip}, {"transpose", tr.transpose}};
}

Transform transform_from(const json& j) {
    return {require_bool(j, "vflip"), require_bool(j, "hflip"), require_bool(j, "transpose")};
}

json packing_json(const Packing& packing) {
    std::vector<Cell> sorted = packing.positions;
    std::sort(sorted.begin(), sorted.end());
    return {{"m", packing.dims.m}, {"n", packing.dims.n}, {"positions", cells_json(sorted)}};
}

json projections_json(const ProjectionPair& pp) {
    return {{"r", pp.r}, {"s", pp.s}};
}

const char* status_name(SolveStatus status) {
    switch (status) {
        case SolveStatus::Feasible: return "feasible";
        case SolveStatus::Infeasible: return "infeasible";
        case SolveStatus::LimitExceeded: return "limit-exceeded";
    }
    return "?";
}

json matrix_json(const ColorMatrix& matrix) {
    std::vector<std::string> rows;
    rows.reserve(matrix.m);
    for (int x = 0; x < matrix.m; ++x) {
        std::string row;
        for (int y = 0; y < matrix.n; ++y) row += color_letter(matrix.at(x, y));
        rows.push_back(std::move(row));
    }
    return {{"m", matrix.m}, {"n", matrix.n}, {"matrix", rows}};
}

CaseTag case_from_name(const std::string& name) {
    if (name == "case1") return CaseTag::Case1;
    if (name == "case2") return CaseTag::Case2;
    if (name == "case3") return CaseTag::Case3;
    if (name == "case4") return CaseTag::Case4;
    throw ParseError("unknown case tag \"" + name + "\"");
}

} // namespace

Tile tile_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.is_object() || !j.contains("cells"))
        throw ParseError("tile JSON must be an object with a \"cells\" array");
    std::vector<Cell> cells = cell_list(j["cells"], "\"cells\"");
    std::vector<Cell> sorted = cells;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ParseError("tile JSON contains duplicate cells");
    return Tile::canonicalize(std::move(cells));
}

std::string tile_to_json(const Tile& tile) {
    return json{{"cells", cells_json(tile.cells())}}.dump();
}

Packing packing_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.is_object()) throw ParseError("packing JSON must be an object");
    Packing p;
    p.dims = {require_int(j, "m"), require_int(j, "n")};
    if (!j.contains("positions")) throw ParseError("packing JSON needs \"positions\"");
    p.positions = cell_list(j["positions"], "\"positions\"");
    std::sort(p.positions.begin(), p.positions.end());
    return p;
}

std::string packing_to_json(const Packing& packing) {
    return packing_json(packing).dump();
}

ProjectionPair projections_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.is_object() || !j.contains("r") || !j.contains("s"))
        throw ParseError("projection JSON needs \"r\" and \"s\" arrays");
    return {int_vector(j["r"], "\"r\""), int_vector(j["s"], "\"s\"")};
}

std::string projections_to_json(const ProjectionPair& pp) {
    return projections_json(pp).dump();
}

TptpInstance tptp_instance_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.is_object() || !j.contains("tile"))
        throw ParseError("instance JSON needs a \"tile\" object");
    TptpInstance inst{tile_from_json(j["tile"].dump()),
                      {require_int(j, "m"), require_int(j, "n")},
                      {}};
    if (!j.contains("r") || !j.contains("s"))
        throw ParseError("instance JSON needs \"r\" and \"s\" arrays");
    inst.target = {int_vector(j["r"], "\"r\""), int_vector(j["s"], "\"s\"")};
    return inst;
}

std::string tptp_instance_to_json(const TptpInstance& inst) {
    return json{{"tile", json{{"cells", cells_json(inst.tile.cells())}}},
                {"m", inst.dims.m},
                {"n", inst.dims.n},
                {"r", inst.target.r},
                {"s", inst.target.s}}
        .dump();
}

ThreeColorInstance three_color_instance_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols"))
        throw ParseError("3-color instance JSON needs \"rows\" and \"cols\" objects");
    ThreeColorInstance inst;
    inst.m = require_int(j, "m");
    inst.n = require_int(j, "n");
    const char* names[3] = {"R", "G", "B"};
    for (int c = 0; c < 3; ++c) {
        if (!j["rows"].contains(names[c]) || !j["cols"].contains(names[c]))
            throw ParseError(std::string("missing color \"") + names[c] + "\"");
        inst.rows[c] = int_vector(j["rows"][names[c]], std::string("rows.") + names[c]);
        inst.cols[c] = int_vector(j["cols"][names[c]], std::string("cols.") + names[c]);
    }
    return inst;
}

std::string three_color_instance_to_json(const ThreeColorInstance& inst) {
    json rows = json::object(), cols = json::object();
    const char* names[3] = {"R", "G", "B"};
    for (int c = 0; c < 3; ++c) {
        rows[names[c]] = inst.rows[c];
        cols[names[c]] = inst.cols[c];
    }
    return json{{"m", inst.m}, {"n", inst.n}, {"rows", rows}, {"cols", cols}}.dump();
}

ColorMatrix color_matrix_from_json(const std::string& text) {
    const json j = parse(text);
    ColorMatrix matrix;
    matrix.m = require_int(j, "m");
    matrix.n = require_int(j, "n");
    if (!j.contains("matrix") || !j["matrix"].is_array() ||
        static_cast<int>(j["matrix"].size()) != matrix.m)
        throw ParseError("\"matrix\" must be an array of m row strings");
    for (const auto& row : j["matrix"]) {
        if (!row.is_string()) throw ParseError("matrix rows must be strings");
        const std::string s = row.get<std::string>();
        if (static_cast<int>(s.size()) != matrix.n)
            throw ParseError("matrix row has wrong length");
        for (char ch : s) {
            switch (ch) {
                case 'R': matrix.values.push_back(Color::R); break;
                case 'G': matrix.values.push_back(Color::G); break;
                case 'B': matrix.values.push_back(Color::B); break;
                default: throw ParseError("matrix entries must be R, G or B");
            }
        }
    }
    return matrix;
}

std::string color_matrix_to_json(const ColorMatrix& matrix) {
    return matrix_json(matrix).dump();
}

ReductionCertificate certificate_from_json(const std::string& text) {
    const json j = parse(text);
    ReductionCertificate cert;
    if (!j.contains("tile")) throw ParseError("certificate JSON needs \"tile\"");
    cert.tile = tile_from_json(j["tile"].dump());
    if (!j.contains("transform")) throw ParseError("certificate JSON needs \"transform\"");
    cert.transform = transform_from(j["transform"]);
    cert.normalized = apply_transform(cert.tile, cert.transform);
    cert.p = require_int(j, "p");
    cert.q = require_int(j, "q");
    cert.a = require_int(j, "a");
    cert.b = require_int(j, "b");
    if (!j.contains("case") || !j["case"].is_string())
        throw ParseError("certificate JSON needs a \"case\" string");
    cert.tag = case_from_name(j["case"].get<std::string>());
    cert.source_m = require_int(j, "m");
    cert.source_n = require_int(j, "n");
    cert.source_infeasible = j.contains("source_infeasible") &&
                             j["source_infeasible"].is_boolean() &&
                             j["source_infeasible"].get<bool>();

    BlockGadget g;
    g.k = require_int(j, "k");
    g.l = require_int(j, "l");
    if (!j.contains("gadget")) throw ParseError("certificate JSON needs \"gadget\"");
    const char* names[3] = {"R", "G", "B"};
    for (int c = 0; c < 3; ++c) {
        if (!j["gadget"].contains(names[c]))
            throw ParseError(std::string("gadget is missing color \"") + names[c] + "\"");
        g.packings[c] = cell_list(j["gadget"][names[c]], std::string("gadget.") + names[c]);
        std::sort(g.packings[c].begin(), g.packings[c].end());
        const ValidityReport rep = validate_packing(cert.normalized, {g.k, g.l}, g.packings[c]);
        if (!rep.ok())
            throw ParseError(std::string("gadget packing ") + names[c] +
                             " is invalid: " + rep.message());
        const ProjectionPair pp = projections({g.k, g.l}, g.packings[c]);
        g.row_proj[c] = pp.r;
        g.col_proj[c] = pp.s;
    }
    cert.gadget = std::move(g);
    cert.reduced_m = cert.source_m * cert.gadget.k;
    cert.reduced_n = cert.source_n * cert.gadget.l;
    return cert;
}

std::string certificate_to_json(const ReductionCertificate& cert) {
    json gadget = json::object();
    const char* names[3] = {"R", "G", "B"};
    for (int c = 0; c < 3; ++c) gadget[names[c]] = cells_json(cert.gadget.packings[c]);
    return json{{"tile", json{{"cells", cells_json(cert.tile.cells())}}},
                {"transform", transform_json(cert.transform)},
                {"p", cert.p},
                {"q", cert.q},
                {"a", cert.a},
                {"b", cert.b},
                {"case", case_name(cert.tag)},
                {"k", cert.gadget.k},
                {"l", cert.gadget.l},
                {"gadget", gadget},
                {"m", cert.source_m},
                {"n", cert.source_n},
                {"source_infeasible", cert.source_infeasible}}
        .dump();
}

std::string validity_report_to_json(const ValidityReport& report) {
    json j{{"ok", report.ok()}, {"message", report.message()}};
    if (report.status == ValidityReport::Status::OutOfGrid)
        j["position"] = {report.position.row, report.position.col};
    if (report.status == ValidityReport::Status::Overlap) {
        j["pair"] = {{report.position.row, report.position.col},
                     {report.second.row, report.second.col}};
        j["difference"] = {report.difference.di, report.difference.dj};
    }
    return j.dump();
}

std::string verification_report_to_json(const VerificationReport& report) {
    const char* name = "holds";
    switch (report.status) {
        case VerificationReport::Status::Holds: name = "holds"; break;
        case VerificationReport::Status::DoesNotHold: name = "does-not-hold"; break;
        case VerificationReport::Status::HypothesisNotMet: name = "hypothesis-not-met"; break;
        case VerificationReport::Status::Inconclusive: name = "inconclusive"; break;
    }
    json j{{"status", name},
           {"holds", report.holds()},
           {"detail", report.detail},
           {"packings_examined", report.packings_examined}};
    if (!report.signature_counts.empty()) {
        json counts = json::object();
        for (const auto& [key, value] : report.signature_counts) counts[key] = value;
        j["signature_counts"] = counts;
    }
    if (report.witness) j["witness"] = packing_json(*report.witness);
    if (report.witness_block)
        j["witness_block"] = {report.witness_block->row, report.witness_block->col};
    return j.dump();
}

std::string tptp_result_to_json(const TptpResult& result, SolveMode mode) {
    json j{{"status", status_name(result.status)}, {"nodes", result.stats.nodes}};
    if (!result.reason.empty()) j["reason"] = result.reason;
    if (result.count) j["count"] = *result.count;
    if (result.witness) j["witness"] = packing_json(*result.witness);
    if (mode == SolveMode::Enumerate) {
        json sols = json::array();
        for (const auto& positions : result.solutions) sols.push_back(cells_json(positions));
        j["solutions"] = sols;
    }
    return j.dump();
}

std::string three_color_result_to_json(const ThreeColorResult& result, SolveMode mode) {
    json j{{"status", status_name(result.status)}, {"nodes", result.stats.nodes}};
    if (!result.reason.empty()) j["reason"] = result.reason;
    if (result.count) j["count"] = *result.count;
    if (result.witness) j["witness"] = matrix_json(*result.witness);
    if (mode == SolveMode::Enumerate) {
        json sols = json::array();
        for (const auto& matrix : result.solutions) sols.push_back(matrix_json(matrix));
        j["solutions"] = sols;
    }
    return j.dump();
}

std::string classification_to_json(const Classification& cls) {
    return json{{"case", case_name(cls.tag)},
                {"p", cls.p},
                {"q", cls.q},
                {"a", cls.a},
                {"b", cls.b},
                {"transform", transform_json(cls.transform)}}
        .dump();
}

std::string gadget_to_json(const Classification& cls, const BlockGadget& gadget) {
    json packs = json::object(), rbar = json::object(), sbar = json::object();
    const char* names[3] = {"R", "G", "B"};
    for (int c = 0; c < 3; ++c) {
        packs[names[c]] = cells_json(gadget.packings[c]);
        rbar[names[c]] = gadget.row_proj[c];
        sbar[names[c]] = gadget.col_proj[c];
    }
    return json{{"case", case_name(cls.tag)},
                {"p", cls.p},
                {"q", cls.q},
                {"a", cls.a},
                {"b", cls.b},
                {"transform", transform_json(cls.transform)},
                {"k", gadget.k},
                {"l", gadget.l},
                {"gadget", packs},
                {"rbar", rbar},
                {"sbar", sbar}}
        .dump();
}

std::string tile_info_to_json(const Tile& tile) {
    return json{{"cells", cells_json(tile.cells())},
                {"w", tile.width()},
                {"h", tile.height()},
                {"area", tile.area()},
                {"bar", is_bar(tile)}}
        .dump();
}

std::string conflict_profile_to_json(const ConflictProfile& profile) {
    json arr = json::array();
    for (const Vector2& v : profile.vectors()) arr.push_back({v.di, v.dj});
    return json{{"h", profile.height()}, {"w", profile.width()}, {"conflicting", arr}}.dump();
}

std::string tile_list_to_json(const std::vector<Tile>& tiles) {
    json arr = json::array();
    for (const Tile& t : tiles) arr.push_back(json{{"cells", cells_json(t.cells())}});
    return json{{"tiles", arr}, {"count", tiles.size()}}.dump();
}

} // namespace tilepack
