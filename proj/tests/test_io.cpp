#include <doctest.h>

#include <json.hpp>

#include "oracle.hpp"
#include "test_helpers.hpp"
#include "tilepack/json_io.hpp"

using namespace tilepack;
using helpers::example_packing_positions;
using helpers::example_tile;
using helpers::l_tromino;
using helpers::small_catalog;
using helpers::square2;
using nlohmann::json;

TEST_SUITE_BEGIN("io");

static ThreeColorInstance all_colors_2x2() {
    ThreeColorInstance inst;
    inst.m = inst.n = 2;
    inst.rows = {{std::vector<int>{1, 1}, std::vector<int>{1, 1}, std::vector<int>{0, 0}}};
    inst.cols = {{std::vector<int>{1, 1}, std::vector<int>{1, 1}, std::vector<int>{0, 0}}};
    return inst;
}

TEST_CASE("tile JSON round trip and canonicalization") {
    const Tile t = tile_from_json(R"({"cells": [[2,3],[2,4],[3,3]]})");
    CHECK(t.cells() == std::vector<Cell>{{0, 0}, {0, 1}, {1, 0}});
    CHECK(tile_from_json(tile_to_json(t)) == t);

    CHECK_THROWS_AS(tile_from_json(R"({"cells": [[0,0],[0,0]]})"), ParseError);
    CHECK_THROWS_AS(tile_from_json(R"({"cells": "no"})"), ParseError);
    CHECK_THROWS_AS(tile_from_json("not json"), ParseError);
    CHECK_THROWS_AS(tile_from_json(R"({"cells": []})"), EmptyTileError);
    CHECK_THROWS_AS(tile_from_json(R"({"cells": [[0,0],[2,2]]})"), DisconnectedTileError);
}

TEST_CASE("tile JSON round trips over the catalog") {
    for (const Tile& t : small_catalog()) CHECK(tile_from_json(tile_to_json(t)) == t);
}

TEST_CASE("packing JSON sorts positions row-major") {
    const Packing p = packing_from_json(R"({"m": 9, "n": 10, "positions": [[6,0],[0,3]]})");
    CHECK(p.positions == std::vector<Cell>{{0, 3}, {6, 0}});
    const json j = json::parse(packing_to_json(p));
    CHECK(j["positions"][0] == json::array({0, 3}));
    CHECK(packing_from_json(packing_to_json(p)) == p);
    CHECK_THROWS_AS(packing_from_json(R"({"m": 1, "positions": []})"), ParseError);
}

TEST_CASE("projection JSON") {
    const ProjectionPair pp{{1, 0, 2}, {2, 1}};
    CHECK(projections_from_json(projections_to_json(pp)) == pp);
}

TEST_CASE("instance JSON round trips") {
    const TptpInstance inst{example_tile(), {9, 10},
                            {{1, 0, 2, 1, 1, 0, 2, 0, 0}, {2, 0, 0, 2, 0, 1, 0, 2, 0, 0}}};
    const TptpInstance back = tptp_instance_from_json(tptp_instance_to_json(inst));
    CHECK(back.tile == inst.tile);
    CHECK(back.dims == inst.dims);
    CHECK(back.target == inst.target);

    const ThreeColorInstance ctp = all_colors_2x2();
    const ThreeColorInstance ctp_back =
        three_color_instance_from_json(three_color_instance_to_json(ctp));
    CHECK(ctp_back.m == ctp.m);
    CHECK(ctp_back.rows == ctp.rows);
    CHECK(ctp_back.cols == ctp.cols);
    CHECK_THROWS_AS(three_color_instance_from_json(R"({"m":1,"n":1,"rows":{}})"), ParseError);
}

TEST_CASE("color matrix JSON") {
    const ColorMatrix m{2, 2, {Color::R, Color::G, Color::B, Color::R}};
    const ColorMatrix back = color_matrix_from_json(color_matrix_to_json(m));
    CHECK(back == m);
    const json j = json::parse(color_matrix_to_json(m));
    CHECK(j["matrix"] == json::array({"RG", "BR"}));
    CHECK_THROWS_AS(color_matrix_from_json(R"({"m":1,"n":1,"matrix":["X"]})"), ParseError);
}

TEST_CASE("certificate JSON round trips and stays usable") {
    const ReductionResult red = reduce(all_colors_2x2(), l_tromino());
    const ReductionCertificate& cert = red.certificate;
    const ReductionCertificate back = certificate_from_json(certificate_to_json(cert));
    CHECK(back.transform == cert.transform);
    CHECK(back.p == cert.p);
    CHECK(back.q == cert.q);
    CHECK(back.a == cert.a);
    CHECK(back.b == cert.b);
    CHECK(back.tag == cert.tag);
    CHECK(back.gadget.k == cert.gadget.k);
    CHECK(back.gadget.l == cert.gadget.l);
    CHECK(back.gadget.packings == cert.gadget.packings);
    CHECK(back.gadget.row_proj == cert.gadget.row_proj);
    CHECK(back.normalized == cert.normalized);
    CHECK(back.reduced_m == cert.reduced_m);
    CHECK(back.source_infeasible == cert.source_infeasible);

    // a parsed certificate drives the solution maps exactly like the original
    const ColorMatrix matrix{2, 2, {Color::R, Color::G, Color::G, Color::R}};
    CHECK(lift_solution(matrix, back) == lift_solution(matrix, cert));
}

TEST_CASE("result and report JSON have the documented shape") {
    const TptpInstance inst{square2(), {2, 2}, {{1, 0}, {1, 0}}};
    const TptpResult res = solve_tptp(inst, SolveMode::Find);
    const json j = json::parse(tptp_result_to_json(res, SolveMode::Find));
    CHECK(j["status"] == "feasible");
    CHECK(j["witness"]["positions"] == json::array({json::array({0, 0})}));

    VerificationReport rep;
    rep.status = VerificationReport::Status::DoesNotHold;
    rep.detail = "because";
    rep.witness = Packing{{2, 2}, {{0, 0}}};
    rep.witness_block = Cell{0, 1};
    rep.signature_counts["R"] = 3;
    const json rj = json::parse(verification_report_to_json(rep));
    CHECK(rj["status"] == "does-not-hold");
    CHECK(rj["holds"] == false);
    CHECK(rj["witness_block"] == json::array({0, 1}));
    CHECK(rj["signature_counts"]["R"] == 3);
}

TEST_SUITE_END();
