#include <doctest.h>

#include <random>
#include <set>
#include <string>

#include "oracle.hpp"
#include "test_helpers.hpp"
#include "tilepack/verify.hpp"

using namespace tilepack;
using helpers::l_tromino;
using helpers::s6_staircase;
using helpers::square2;
using helpers::tile_of;

TEST_SUITE_BEGIN("verify");

static ThreeColorInstance all_b_1x1() {
    ThreeColorInstance inst;
    inst.m = inst.n = 1;
    inst.rows = {{std::vector<int>{0}, std::vector<int>{0}, std::vector<int>{1}}};
    inst.cols = {{std::vector<int>{0}, std::vector<int>{0}, std::vector<int>{1}}};
    return inst;
}

static ThreeColorInstance all_colors_2x2() {
    ThreeColorInstance inst;
    inst.m = inst.n = 2;
    inst.rows = {{std::vector<int>{1, 1}, std::vector<int>{1, 1}, std::vector<int>{0, 0}}};
    inst.cols = {{std::vector<int>{1, 1}, std::vector<int>{1, 1}, std::vector<int>{0, 0}}};
    return inst;
}

TEST_CASE("restriction") {
    CHECK(restriction({4, 3, 1, 0, 7, 9, 5}, {0, 3, 4}) == std::vector<int>{4, 0, 7});
    CHECK(restriction({1, 2}, {0, 1}) == std::vector<int>{1, 2});
    CHECK(restriction({1, 2}, {1, 0}) == std::vector<int>{2, 1});
    CHECK_THROWS_AS(restriction({1, 2}, {2}), IndexOutOfRangeError);
    CHECK_THROWS_AS(restriction({1, 2}, {0, 0}), IndexOutOfRangeError);
}

TEST_CASE("affine independence of the documented examples") {
    CHECK(affinely_independent({{1, 1}, {3, 4}, {5, 5}}));
    CHECK_FALSE(affinely_independent({{2, 3, 5}, {2, 3, 5}}));
    CHECK(affinely_independent({{1, 1, 1}, {1, 0, 2}, {2, 0, 2}}));
    CHECK(affinely_independent({{7, 7, 7}})); // single vector
    CHECK_THROWS_AS(affinely_independent({}), DimensionMismatchError);
    CHECK_THROWS_AS(affinely_independent({{1, 2}, {1, 2, 3}}), DimensionMismatchError);
}

TEST_CASE("affine independence agrees with the definitional rational test") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> count(1, 4);
    std::uniform_int_distribution<int> length(1, 6);
    for (int trial = 0; trial < 800; ++trial) {
        const int k = count(rng);
        const int len = length(rng);
        std::vector<std::vector<long long>> vs(k, std::vector<long long>(len));
        for (auto& v : vs)
            for (auto& x : v) x = entry(rng);
        const bool expected = oracle::affinely_independent_definitional(vs);
        CAPTURE(trial);
        CHECK(affinely_independent(vs) == expected);
        CHECK(oracle::affinely_independent_differences(vs) == expected);
    }
}

TEST_CASE("requirement 1 on fixture gadgets") {
    const Classification square = classify(square2());
    const BlockGadget g =
        build_gadget(square.normalized, square.tag, square.p, square.q, square.a, square.b);
    CHECK(check_requirement1(g));

    const Classification l = classify(l_tromino());
    const BlockGadget lg = build_gadget(l.normalized, l.tag, l.p, l.q, l.a, l.b);
    CHECK(check_requirement1(lg));

    BlockGadget degenerate = g;
    degenerate.packings[1] = degenerate.packings[0];
    degenerate.row_proj[1] = degenerate.row_proj[0];
    degenerate.col_proj[1] = degenerate.col_proj[0];
    CHECK_FALSE(check_requirement1(degenerate));
}

TEST_CASE("requirement 2 on the unit all-blue instance") {
    const ReductionResult red = reduce(all_b_1x1(), square2());
    const VerificationReport rep = check_requirement2(red.instance, red.certificate);
    CHECK(rep.holds());
    CHECK(rep.packings_examined == 1);
    CHECK(rep.signature_counts.at("B") == 1);
    CHECK(rep.signature_counts.size() == 1);
}

TEST_CASE("requirement 2 on the 2x2 all-colors instance") {
    const ReductionResult red = reduce(all_colors_2x2(), square2());
    const VerificationReport rep = check_requirement2(red.instance, red.certificate);
    CHECK(rep.holds());
    CHECK(rep.packings_examined == 2);
    long long total = 0;
    for (const auto& [key, count] : rep.signature_counts) {
        CAPTURE(key);
        CHECK((key == "R" || key == "G" || key == "B"));
        total += count;
    }
    // every block of every packing is tallied exactly once
    CHECK(total == rep.packings_examined * 2 * 2);
    // the forbidden symmetric block never appears
    const std::string forbidden = signature_key({1, 0, 2, 0}, {1, 0, 2, 0});
    CHECK(rep.signature_counts.count(forbidden) == 0);
}

TEST_CASE("requirement 2 holds across the desk-scale sweep") {
    std::vector<ThreeColorInstance> instances;
    std::set<std::string> seen;
    for (int code = 0; code < 81; ++code) {
        ColorMatrix matrix{2, 2, std::vector<Color>(4)};
        int rest = code;
        for (int i = 0; i < 4; ++i) {
            matrix.values[i] = static_cast<Color>(rest % 3);
            rest /= 3;
        }
        ThreeColorInstance inst;
        inst.m = inst.n = 2;
        for (int c = 0; c < 3; ++c) {
            inst.rows[c].assign(2, 0);
            inst.cols[c].assign(2, 0);
        }
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y) {
                ++inst.rows[static_cast<int>(matrix.at(x, y))][x];
                ++inst.cols[static_cast<int>(matrix.at(x, y))][y];
            }
        std::string key;
        for (int c = 0; c < 3; ++c) {
            for (int v : inst.rows[c]) key += std::to_string(v) + ",";
            for (int v : inst.cols[c]) key += std::to_string(v) + ";";
        }
        if (seen.insert(key).second) instances.push_back(inst);
    }
    const std::vector<Tile> tiles = tilepack::tile_catalog({3, 3, 5, false});
    for (const Tile& t : tiles)
        for (const ThreeColorInstance& inst : instances) {
            const ReductionResult red = reduce(inst, t);
            const VerificationReport rep = check_requirement2(red.instance, red.certificate);
            CAPTURE(rep.detail);
            CHECK(rep.holds());
            long long total = 0;
            for (const auto& [key, count] : rep.signature_counts) total += count;
            CHECK(total == rep.packings_examined * inst.m * inst.n);
        }
}

TEST_CASE("requirement 2 under a perturbed target carries evidence") {
    ReductionResult red = reduce(all_colors_2x2(), square2());
    std::swap(red.instance.target.r[0], red.instance.target.r[1]);
    const VerificationReport rep = check_requirement2(red.instance, red.certificate);
    if (rep.holds()) {
        CHECK(rep.packings_examined == 0); // vacuous: nothing satisfies the target
    } else {
        CHECK(rep.witness.has_value());
        CHECK(rep.witness_block.has_value());
    }
}

TEST_CASE("requirement 2 respects search limits") {
    const ReductionResult red = reduce(all_colors_2x2(), square2());
    SearchLimits limits;
    limits.max_nodes = 1;
    const VerificationReport rep = check_requirement2(red.instance, red.certificate, limits);
    CHECK(rep.status == VerificationReport::Status::Inconclusive);
    CHECK_FALSE(rep.holds());
}

TEST_CASE("adapted Ryser lemma on a reduced staircase instance") {
    const ReductionResult red = reduce(all_b_1x1(), s6_staircase());
    const ReductionCertificate& cert = red.certificate;
    // I = rows congruent to p, J = columns congruent to q, both mapped into
    // the original frame (the transform is a vflip).
    std::vector<int> I, J;
    for (int x = 0; x < cert.source_m; ++x)
        I.push_back(cert.reduced_m - cert.tile.height() - (x * cert.gadget.k + cert.p));
    for (int y = 0; y < cert.source_n; ++y) J.push_back(y * cert.gadget.l + cert.q);
    CHECK(I == std::vector<int>{0});
    CHECK(J == std::vector<int>{2});

    const VerificationReport rep =
        check_ryser_lemma(cert.tile, red.instance.dims, I, J, red.instance.target);
    CHECK(rep.holds());
    CHECK(rep.packings_examined == 1);
    CHECK(xi(cert.tile, red.instance.dims, I, J) == 1); // = mn
}

TEST_CASE("adapted Ryser lemma: vacuous and hypothesis-not-met cases") {
    const Tile cell = tile_of({{0, 0}});
    const VerificationReport vacuous =
        check_ryser_lemma(cell, {1, 1}, {}, {0}, {{0}, {0}});
    CHECK(vacuous.holds());

    const VerificationReport not_met =
        check_ryser_lemma(cell, {2, 2}, {0}, {0, 1}, {{1, 1}, {1, 1}});
    CHECK(not_met.status == VerificationReport::Status::HypothesisNotMet);
    CHECK_FALSE(not_met.holds());
}

TEST_CASE("equisatisfiability on fixtures") {
    CHECK(check_equisat(all_b_1x1(), square2()).holds());

    ThreeColorInstance bad = all_b_1x1();
    bad.cols[2] = {0};
    bad.cols[0] = {1};
    const VerificationReport mismatch = check_equisat(bad, l_tromino());
    CHECK(mismatch.holds()); // both sides infeasible

    const VerificationReport full = check_equisat(all_colors_2x2(), l_tromino());
    CHECK(full.holds());
}

TEST_SUITE_END();
