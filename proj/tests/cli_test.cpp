#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_tool(const std::string& args, const std::string& stdin_text = "") {
    std::string cmd;
    if (!stdin_text.empty()) {
        const std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                                 "/tomo_cli_stdin.json";
        std::ofstream(path) << stdin_text;
        cmd = std::string(TOMO_BIN) + " " + args + " < " + path + " 2>/dev/null";
    } else {
        cmd = std::string(TOMO_BIN) + " " + args + " 2>/dev/null";
    }
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
    const std::string path =
        std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/" + name;
    std::ofstream(path) << content;
    return path;
}

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("project reproduces the worked projections") {
    const RunResult res = run_tool("project --packing " + fixture("fig1_packing.json"));
    CHECK(res.exit_code == 0);
    const json j = json::parse(res.out);
    CHECK(j["r"] == json::array({1, 0, 2, 1, 1, 0, 2, 0, 0}));
    CHECK(j["s"] == json::array({2, 0, 0, 2, 0, 1, 0, 2, 0, 0}));
}

TEST_CASE("classify emits the case and parameters") {
    const RunResult res = run_tool("classify --tile " + fixture("square.json"));
    CHECK(res.exit_code == 0);
    const json j = json::parse(res.out);
    CHECK(j["case"] == "case3");
    CHECK(j["p"] == 1);
    CHECK(j["q"] == 1);
    CHECK(j["a"] == 2);
    CHECK(j["b"] == 2);
    CHECK(j["transform"]["vflip"] == false);
}

TEST_CASE("tile info and conflicts") {
    const RunResult info = run_tool("tile info --tile " + fixture("fig1_tile.json"));
    CHECK(info.exit_code == 0);
    const json j = json::parse(info.out);
    CHECK(j["w"] == 3);
    CHECK(j["h"] == 3);
    CHECK(j["bar"] == false);
    CHECK(j["area"] == 7);

    const RunResult conflicts = run_tool("tile conflicts --tile " + fixture("square.json"));
    CHECK(conflicts.exit_code == 0);
    CHECK(json::parse(conflicts.out)["conflicting"].size() == 9);
}

TEST_CASE("tile input from stdin") {
    const RunResult res = run_tool("tile info --tile -", R"({"cells": [[0,0],[0,1]]})");
    CHECK(res.exit_code == 0);
    CHECK(json::parse(res.out)["bar"] == true);
}

TEST_CASE("solve exit codes follow feasibility") {
    const std::string feasible = temp_file("tomo_cli_feasible.json",
                                           R"({"tile": {"cells": [[0,0]]}, "m": 2, "n": 2,
                                               "r": [2, 0], "s": [1, 1]})");
    CHECK(run_tool("solve --instance " + feasible + " --mode decide").exit_code == 0);

    const std::string infeasible = temp_file("tomo_cli_infeasible.json",
                                             R"({"tile": {"cells": [[0,0]]}, "m": 2, "n": 2,
                                                 "r": [2, 0], "s": [2, 0]})");
    CHECK(run_tool("solve --instance " + infeasible + " --mode decide").exit_code == 1);

    const RunResult count = run_tool("solve --instance " + feasible + " --mode count");
    CHECK(count.exit_code == 0);
    CHECK(json::parse(count.out)["count"] == 1);
}

TEST_CASE("solve accepts 3-color instances") {
    const RunResult res =
        run_tool("solve --instance " + fixture("ctp_all_colors_2x2.json") + " --mode count");
    CHECK(res.exit_code == 0);
    CHECK(json::parse(res.out)["count"] == 2);
}

TEST_CASE("limit exceeded maps to exit 3") {
    const std::string inst = temp_file(
        "tomo_cli_limited.json",
        R"({"tile": {"cells": [[0,0],[0,1],[1,0],[1,1],[1,2],[2,1],[2,2]]}, "m": 9, "n": 10,
            "r": [1,0,2,1,1,0,2,0,0], "s": [2,0,0,2,0,1,0,2,0,0]})");
    CHECK(run_tool("solve --instance " + inst + " --mode decide --limit-nodes 1").exit_code == 3);
}

TEST_CASE("enumerate lists the worked packing") {
    const std::string inst = temp_file(
        "tomo_cli_enum.json",
        R"({"tile": {"cells": [[0,0],[0,1],[1,0],[1,1],[1,2],[2,1],[2,2]]}, "m": 9, "n": 10,
            "r": [1,0,2,1,1,0,2,0,0], "s": [2,0,0,2,0,1,0,2,0,0]})");
    const RunResult res = run_tool("enumerate --instance " + inst);
    CHECK(res.exit_code == 0);
    const json j = json::parse(res.out);
    const json expected =
        json::array({{0, 3}, {2, 0}, {2, 7}, {3, 5}, {4, 3}, {6, 0}, {6, 7}});
    bool found = false;
    for (const auto& sol : j["solutions"]) found = found || sol == expected;
    CHECK(found);
}

TEST_CASE("render prints the grid with margins") {
    const std::string packing = temp_file("tomo_cli_render.json",
                                          R"({"m": 1, "n": 3, "positions": [[0, 1]]})");
    const std::string tile = temp_file("tomo_cli_cell.json", R"({"cells": [[0,0]]})");
    const RunResult ascii = run_tool("render --tile " + tile + " --packing " + packing + " --ascii");
    CHECK(ascii.exit_code == 0);
    CHECK(ascii.out == ".a. 1\ns: 0 1 0\n");
    const RunResult wrapped = run_tool("render --tile " + tile + " --packing " + packing);
    CHECK(json::parse(wrapped.out)["text"] == ".a. 1\ns: 0 1 0\n");
}

TEST_CASE("verify-packing distinguishes valid and invalid") {
    CHECK(run_tool("verify-packing --tile " + fixture("fig1_tile.json") + " --packing " +
                   fixture("fig1_packing.json"))
              .exit_code == 0);
    const std::string bad = temp_file("tomo_cli_bad_packing.json",
                                      R"({"m": 9, "n": 10, "positions": [[0,3],[1,4]]})");
    const RunResult res =
        run_tool("verify-packing --tile " + fixture("fig1_tile.json") + " --packing " + bad);
    CHECK(res.exit_code == 1);
    CHECK(json::parse(res.out)["ok"] == false);
}

TEST_CASE("reduce and the check family") {
    const RunResult reduced = run_tool("reduce --instance " + fixture("ctp_all_b_1x1.json") +
                                       " --tile " + fixture("square.json"));
    CHECK(reduced.exit_code == 0);
    const json j = json::parse(reduced.out);
    CHECK(j["m"] == 4);
    CHECK(j["r"] == json::array({2, 0, 2, 0}));

    CHECK(run_tool("check requirement1 --tile " + fixture("square.json")).exit_code == 0);
    const RunResult equisat = run_tool("check equisat --instance " + fixture("ctp_all_b_1x1.json") +
                                       " --tile " + fixture("square.json"));
    CHECK(equisat.exit_code == 0);
    CHECK(json::parse(equisat.out)["holds"] == true);

    const RunResult req2 = run_tool("check requirement2 --instance " +
                                    fixture("ctp_all_b_1x1.json") + " --tile " +
                                    fixture("square.json"));
    CHECK(req2.exit_code == 0);
    CHECK(json::parse(req2.out)["signature_counts"]["B"] == 1);
}

TEST_CASE("check ryser-lemma through the CLI") {
    // Reduced staircase instance in the original frame; I = {0}, J = {2}.
    const std::string inst = temp_file(
        "tomo_cli_ryser.json",
        R"({"tile": {"cells": [[0,0],[1,0],[1,1],[2,1],[2,2],[3,2]]}, "m": 7, "n": 5,
            "r": [1,0,0,0,0,0,0], "s": [0,0,1,0,0]})");
    const RunResult res = run_tool("check ryser-lemma --instance " + inst + " --rows 0 --cols 2");
    CHECK(res.exit_code == 0);
    CHECK(json::parse(res.out)["holds"] == true);
}

TEST_CASE("catalog counts the small non-bar tiles") {
    const RunResult res = run_tool("catalog --max-height 2 --max-width 2");
    CHECK(res.exit_code == 0);
    CHECK(json::parse(res.out)["count"] == 5); // four L-trominoes and the square
}

TEST_CASE("usage and input errors exit with 2") {
    CHECK(run_tool("no-such-command").exit_code == 2);
    CHECK(run_tool("classify").exit_code == 2); // missing --tile
    const std::string bad = temp_file("tomo_cli_bad_tile.json", "{broken");
    CHECK(run_tool("classify --tile " + bad).exit_code == 2);
    const std::string bar = temp_file("tomo_cli_bar.json", R"({"cells": [[0,0],[0,1]]})");
    CHECK(run_tool("classify --tile " + bar).exit_code == 2); // bar tile is an input error
}

TEST_SUITE_END();
