// tomo: command-line frontend for tile-packing tomography.
//
// Exit codes: 0 success/feasible/holds, 1 infeasible/does-not-hold,
// 2 usage or input error, 3 search limit exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tilepack/catalog.hpp"
#include "tilepack/json_io.hpp"
#include "tilepack/verify.hpp"

namespace {

using namespace tilepack;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;
constexpr int kLimit = 3;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw Error("cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write \"" + path + "\"");
    out << text << "\n";
}

struct LimitFlags {
    long long max_nodes = 0;
    long long max_solutions = 0;
    double timeout_secs = 0;
    int jobs = 1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--limit-nodes", max_nodes, "Stop after this many search nodes");
        cmd->add_option("--limit-solutions", max_solutions, "Stop after this many solutions");
        cmd->add_option("--timeout-secs", timeout_secs, "Wall-clock budget in seconds");
        cmd->add_option("--jobs", jobs, "Worker threads (results are job-count independent)")
            ->check(CLI::Range(1, 64));
    }
    SearchLimits to_limits() const {
        SearchLimits limits;
        if (max_nodes > 0) limits.max_nodes = max_nodes;
        if (max_solutions > 0) limits.max_solutions = max_solutions;
        if (timeout_secs > 0) limits.timeout_secs = timeout_secs;
        limits.jobs = jobs;
        return limits;
    }
};

int status_exit(SolveStatus status) {
    switch (status) {
        case SolveStatus::Feasible: return kOk;
        case SolveStatus::Infeasible: return kNegative;
        case SolveStatus::LimitExceeded: return kLimit;
    }
    return kInputError;
}

int report_exit(const VerificationReport& rep) {
    switch (rep.status) {
        case VerificationReport::Status::Holds: return kOk;
        case VerificationReport::Status::DoesNotHold:
        case VerificationReport::Status::HypothesisNotMet: return kNegative;
        case VerificationReport::Status::Inconclusive: return kLimit;
    }
    return kInputError;
}

SolveMode parse_mode(const std::string& name) {
    if (name == "decide") return SolveMode::Decide;
    if (name == "find") return SolveMode::Find;
    if (name == "count") return SolveMode::Count;
    if (name == "enumerate") return SolveMode::Enumerate;
    throw Error("unknown mode \"" + name + "\"");
}

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        size_t used = 0;
        out.push_back(std::stoi(item, &used));
        if (used != item.size()) throw Error("bad index \"" + item + "\"");
    }
    return out;
}

const char* status_text(SolveStatus status) {
    switch (status) {
        case SolveStatus::Feasible: return "feasible";
        case SolveStatus::Infeasible: return "infeasible";
        case SolveStatus::LimitExceeded: return "limit-exceeded";
    }
    return "?";
}

void print_positions(const std::vector<Cell>& positions) {
    for (size_t i = 0; i < positions.size(); ++i)
        std::cout << (i ? " " : "") << "(" << positions[i].row << "," << positions[i].col << ")";
    std::cout << "\n";
}

// Dispatch on the instance schema: a "tile" key means tile packing, a
// "rows" key means three colors.
int run_solve(const std::string& instance_text, SolveMode mode, const SearchLimits& limits,
              bool ascii) {
    const nlohmann::json probe = [&] {
        try {
            return nlohmann::json::parse(instance_text);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what());
        }
    }();
    if (probe.is_object() && probe.contains("tile")) {
        const TptpInstance inst = tptp_instance_from_json(instance_text);
        const TptpResult res = solve_tptp(inst, mode, limits);
        if (!ascii) {
            std::cout << tptp_result_to_json(res, mode) << "\n";
        } else {
            std::cout << status_text(res.status);
            if (!res.reason.empty()) std::cout << " (" << res.reason << ")";
            std::cout << "\n";
            if (res.count) std::cout << "count: " << *res.count << "\n";
            if (res.witness)
                std::cout << render(inst.tile, res.witness->dims, res.witness->positions);
            if (mode == SolveMode::Enumerate)
                for (const auto& positions : res.solutions) print_positions(positions);
        }
        return status_exit(res.status);
    }
    if (probe.is_object() && probe.contains("rows")) {
        const ThreeColorInstance inst = three_color_instance_from_json(instance_text);
        const ThreeColorResult res = solve_3ctp(inst, mode, limits);
        if (!ascii) {
            std::cout << three_color_result_to_json(res, mode) << "\n";
        } else {
            std::cout << status_text(res.status);
            if (!res.reason.empty()) std::cout << " (" << res.reason << ")";
            std::cout << "\n";
            if (res.count) std::cout << "count: " << *res.count << "\n";
            const auto print_matrix = [](const ColorMatrix& matrix) {
                for (int x = 0; x < matrix.m; ++x) {
                    for (int y = 0; y < matrix.n; ++y) std::cout << color_letter(matrix.at(x, y));
                    std::cout << "\n";
                }
            };
            if (res.witness) print_matrix(*res.witness);
            if (mode == SolveMode::Enumerate)
                for (size_t i = 0; i < res.solutions.size(); ++i) {
                    if (i) std::cout << "\n";
                    print_matrix(res.solutions[i]);
                }
        }
        return status_exit(res.status);
    }
    throw ParseError("instance JSON must contain \"tile\" (packing) or \"rows\" (3-color)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tile-packing tomography: exact reconstruction and the 3-color reduction"};
    app.require_subcommand(1);
    int exit_code = kOk;

    // --- tile info / tile conflicts
    auto* tile_cmd = app.add_subcommand("tile", "Inspect a tile");
    tile_cmd->require_subcommand(1);
    std::string tile_path;
    auto* tile_info = tile_cmd->add_subcommand("info", "Dimensions, area, bar flag");
    tile_info->add_option("--tile", tile_path, "Tile JSON (path or -)")->required();
    tile_info->callback([&] {
        std::cout << tile_info_to_json(tile_from_json(read_input(tile_path))) << "\n";
    });
    auto* tile_conflicts = tile_cmd->add_subcommand("conflicts", "Conflicting vectors");
    tile_conflicts->add_option("--tile", tile_path, "Tile JSON (path or -)")->required();
    tile_conflicts->callback([&] {
        std::cout << conflict_profile_to_json(conflict_profile(tile_from_json(read_input(tile_path))))
                  << "\n";
    });

    // --- classify
    auto* classify_cmd = app.add_subcommand("classify", "Case classification of a tile");
    std::string classify_tile;
    classify_cmd->add_option("--tile", classify_tile, "Tile JSON (path or -)")->required();
    classify_cmd->callback([&] {
        std::cout << classification_to_json(classify(tile_from_json(read_input(classify_tile))))
                  << "\n";
    });

    // --- gadget
    auto* gadget_cmd = app.add_subcommand("gadget", "Block packings for a tile");
    std::string gadget_tile;
    gadget_cmd->add_option("--tile", gadget_tile, "Tile JSON (path or -)")->required();
    gadget_cmd->callback([&] {
        const Classification cls = classify(tile_from_json(read_input(gadget_tile)));
        const BlockGadget g = build_gadget(cls.normalized, cls.tag, cls.p, cls.q, cls.a, cls.b);
        std::cout << gadget_to_json(cls, g) << "\n";
    });

    // --- reduce
    auto* reduce_cmd = app.add_subcommand("reduce", "Map a 3-color instance to a packing instance");
    std::string reduce_instance, reduce_tile, reduce_cert;
    reduce_cmd->add_option("--instance", reduce_instance, "3-color instance JSON (path or -)")
        ->required();
    reduce_cmd->add_option("--tile", reduce_tile, "Tile JSON (path or -)")->required();
    reduce_cmd->add_option("--cert", reduce_cert, "Write the reduction certificate here");
    reduce_cmd->callback([&] {
        const ReductionResult red = reduce(three_color_instance_from_json(read_input(reduce_instance)),
                                           tile_from_json(read_input(reduce_tile)));
        if (!reduce_cert.empty()) write_output(reduce_cert, certificate_to_json(red.certificate));
        std::cout << tptp_instance_to_json(red.instance) << "\n";
    });

    // --- project
    auto* project_cmd = app.add_subcommand("project", "Projections of a packing");
    std::string project_packing;
    project_cmd->add_option("--packing", project_packing, "Packing JSON (path or -)")->required();
    project_cmd->callback([&] {
        const Packing p = packing_from_json(read_input(project_packing));
        std::cout << projections_to_json(projections(p.dims, p.positions)) << "\n";
    });

    // --- verify-packing
    auto* verify_cmd = app.add_subcommand("verify-packing", "Validity of a packing");
    std::string verify_tile, verify_packing;
    verify_cmd->add_option("--tile", verify_tile, "Tile JSON (path or -)")->required();
    verify_cmd->add_option("--packing", verify_packing, "Packing JSON (path or -)")->required();
    verify_cmd->callback([&] {
        const Packing p = packing_from_json(read_input(verify_packing));
        const ValidityReport rep =
            validate_packing(tile_from_json(read_input(verify_tile)), p.dims, p.positions);
        std::cout << validity_report_to_json(rep) << "\n";
        if (!rep.ok()) exit_code = kNegative;
    });

    // --- solve / enumerate
    auto* solve_cmd = app.add_subcommand("solve", "Decide, find, or count solutions");
    std::string solve_instance, solve_mode = "decide";
    bool solve_ascii = false;
    LimitFlags solve_limits;
    solve_cmd->add_option("--instance", solve_instance, "Instance JSON (path or -)")->required();
    solve_cmd->add_option("--mode", solve_mode, "decide|find|count|enumerate");
    solve_cmd->add_flag("--ascii", solve_ascii, "Plain-text output instead of JSON");
    solve_limits.attach(solve_cmd);
    solve_cmd->callback([&] {
        exit_code = run_solve(read_input(solve_instance), parse_mode(solve_mode),
                              solve_limits.to_limits(), solve_ascii);
    });

    auto* enum_cmd = app.add_subcommand("enumerate", "List every solution");
    std::string enum_instance;
    bool enum_ascii = false;
    LimitFlags enum_limits;
    enum_cmd->add_option("--instance", enum_instance, "Instance JSON (path or -)")->required();
    enum_cmd->add_flag("--ascii", enum_ascii, "Plain-text output instead of JSON");
    enum_limits.attach(enum_cmd);
    enum_cmd->callback([&] {
        exit_code = run_solve(read_input(enum_instance), SolveMode::Enumerate,
                              enum_limits.to_limits(), enum_ascii);
    });

    // --- render
    auto* render_cmd = app.add_subcommand("render", "ASCII picture of a packing");
    std::string render_tile, render_packing;
    bool render_ascii = false;
    render_cmd->add_option("--tile", render_tile, "Tile JSON (path or -)")->required();
    render_cmd->add_option("--packing", render_packing, "Packing JSON (path or -)")->required();
    render_cmd->add_flag("--ascii", render_ascii, "Print the grid directly instead of JSON");
    render_cmd->callback([&] {
        const Packing p = packing_from_json(read_input(render_packing));
        const std::string text =
            render(tile_from_json(read_input(render_tile)), p.dims, p.positions);
        if (render_ascii)
            std::cout << text;
        else
            std::cout << nlohmann::json{{"text", text}}.dump() << "\n";
    });

    // --- check requirement1|requirement2|ryser-lemma|equisat
    auto* check_cmd = app.add_subcommand("check", "Machine checks of the correctness conditions");
    check_cmd->require_subcommand(1);

    auto* req1_cmd = check_cmd->add_subcommand("requirement1", "Affine independence of the gadget");
    std::string req1_tile;
    req1_cmd->add_option("--tile", req1_tile, "Tile JSON (path or -)")->required();
    req1_cmd->callback([&] {
        const Classification cls = classify(tile_from_json(read_input(req1_tile)));
        const BlockGadget g = build_gadget(cls.normalized, cls.tag, cls.p, cls.q, cls.a, cls.b);
        const bool holds = check_requirement1(g);
        std::cout << nlohmann::json{{"holds", holds}}.dump() << "\n";
        if (!holds) exit_code = kNegative;
    });

    auto* req2_cmd = check_cmd->add_subcommand("requirement2", "Block structure of every solution");
    std::string req2_instance, req2_tile;
    LimitFlags req2_limits;
    req2_cmd->add_option("--instance", req2_instance, "3-color instance JSON (path or -)")
        ->required();
    req2_cmd->add_option("--tile", req2_tile, "Tile JSON (path or -)")->required();
    req2_limits.attach(req2_cmd);
    req2_cmd->callback([&] {
        const ReductionResult red =
            reduce(three_color_instance_from_json(read_input(req2_instance)),
                   tile_from_json(read_input(req2_tile)));
        const VerificationReport rep =
            check_requirement2(red.instance, red.certificate, req2_limits.to_limits());
        std::cout << verification_report_to_json(rep) << "\n";
        exit_code = report_exit(rep);
    });

    auto* ryser_cmd = check_cmd->add_subcommand("ryser-lemma", "The adapted Ryser lemma");
    std::string ryser_instance, ryser_rows, ryser_cols;
    LimitFlags ryser_limits;
    ryser_cmd->add_option("--instance", ryser_instance, "Packing instance JSON (path or -)")
        ->required();
    ryser_cmd->add_option("--rows", ryser_rows, "Comma-separated row set I")->required();
    ryser_cmd->add_option("--cols", ryser_cols, "Comma-separated column set J")->required();
    ryser_limits.attach(ryser_cmd);
    ryser_cmd->callback([&] {
        const TptpInstance inst = tptp_instance_from_json(read_input(ryser_instance));
        const VerificationReport rep =
            check_ryser_lemma(inst.tile, inst.dims, parse_index_list(ryser_rows),
                              parse_index_list(ryser_cols), inst.target, ryser_limits.to_limits());
        std::cout << verification_report_to_json(rep) << "\n";
        exit_code = report_exit(rep);
    });

    auto* equisat_cmd = check_cmd->add_subcommand("equisat", "Source and image agree");
    std::string equisat_instance, equisat_tile;
    LimitFlags equisat_limits;
    equisat_cmd->add_option("--instance", equisat_instance, "3-color instance JSON (path or -)")
        ->required();
    equisat_cmd->add_option("--tile", equisat_tile, "Tile JSON (path or -)")->required();
    equisat_limits.attach(equisat_cmd);
    equisat_cmd->callback([&] {
        const VerificationReport rep =
            check_equisat(three_color_instance_from_json(read_input(equisat_instance)),
                          tile_from_json(read_input(equisat_tile)), equisat_limits.to_limits());
        std::cout << verification_report_to_json(rep) << "\n";
        exit_code = report_exit(rep);
    });

    // --- catalog
    auto* catalog_cmd = app.add_subcommand("catalog", "Enumerate canonical tiles");
    CatalogOptions catalog_options;
    catalog_cmd->add_option("--max-height", catalog_options.max_height, "Bounding box height")
        ->check(CLI::Range(1, 8));
    catalog_cmd->add_option("--max-width", catalog_options.max_width, "Bounding box width")
        ->check(CLI::Range(1, 8));
    catalog_cmd->add_option("--max-area", catalog_options.max_area, "Largest cell count (0 = all)");
    catalog_cmd->add_flag("--include-bars", catalog_options.include_bars, "Keep bar tiles");
    catalog_cmd->callback([&] {
        std::cout << tile_list_to_json(tile_catalog(catalog_options)) << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return exit_code;
}
