#include <benchmark/benchmark.h>

#include "tilepack/reduction.hpp"
#include "tilepack/verify.hpp"

namespace {

using namespace tilepack;

const Tile& heptomino() {
    static const Tile t =
        Tile::canonicalize({{0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2}});
    return t;
}

const Tile& square2() {
    static const Tile t = Tile::canonicalize({{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    return t;
}

TptpInstance worked_instance() {
    return {heptomino(), {9, 10},
            {{1, 0, 2, 1, 1, 0, 2, 0, 0}, {2, 0, 0, 2, 0, 1, 0, 2, 0, 0}}};
}

ThreeColorInstance all_colors_2x2() {
    ThreeColorInstance inst;
    inst.m = inst.n = 2;
    inst.rows = {{std::vector<int>{1, 1}, std::vector<int>{1, 1}, std::vector<int>{0, 0}}};
    inst.cols = {{std::vector<int>{1, 1}, std::vector<int>{1, 1}, std::vector<int>{0, 0}}};
    return inst;
}

void BM_ConflictProfile(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(conflict_profile(heptomino()));
}
BENCHMARK(BM_ConflictProfile);

void BM_Classify(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(classify(heptomino()));
}
BENCHMARK(BM_Classify);

void BM_SolveWorkedDecide(benchmark::State& state) {
    const TptpInstance inst = worked_instance();
    for (auto _ : state) benchmark::DoNotOptimize(solve_tptp(inst, SolveMode::Decide));
}
BENCHMARK(BM_SolveWorkedDecide);

void BM_SolveWorkedEnumerate(benchmark::State& state) {
    const TptpInstance inst = worked_instance();
    for (auto _ : state) benchmark::DoNotOptimize(solve_tptp(inst, SolveMode::Enumerate));
}
BENCHMARK(BM_SolveWorkedEnumerate);

void BM_ReduceAndDecide(benchmark::State& state) {
    const ThreeColorInstance inst = all_colors_2x2();
    for (auto _ : state) {
        const ReductionResult red = reduce(inst, square2());
        benchmark::DoNotOptimize(solve_tptp(red.instance, SolveMode::Decide));
    }
}
BENCHMARK(BM_ReduceAndDecide);

void BM_Requirement2Square(benchmark::State& state) {
    const ReductionResult red = reduce(all_colors_2x2(), square2());
    for (auto _ : state)
        benchmark::DoNotOptimize(check_requirement2(red.instance, red.certificate));
}
BENCHMARK(BM_Requirement2Square);

} // namespace

BENCHMARK_MAIN();
