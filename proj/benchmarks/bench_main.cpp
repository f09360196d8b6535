#include <benchmark/benchmark.h>

#include <random>

#include "senslab/analyzers.hpp"
#include "senslab/certificates.hpp"
#include "senslab/constructions.hpp"
#include "senslab/group.hpp"
#include "senslab/truth_table.hpp"
#include "senslab/util.hpp"

using namespace senslab;

namespace {

Word random_word(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::size_t> ones;
    for (std::size_t pos = 1; pos <= n; ++pos) {
        if (uniform_below(rng, 2)) ones.push_back(pos);
    }
    return Word::from_support(n, ones);
}

void BM_WindowClosureEval(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const OrbitPattern f = theorem31_function(n);
    std::mt19937_64 rng(1);
    const Word x = random_word(n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(f.evaluate(x));
    }
}
BENCHMARK(BM_WindowClosureEval)->Arg(512)->Arg(4096);

void BM_WitnessSensitivity(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const OrbitPattern f = theorem31_function(n);
    const Word w = witness_one(n, std::max<std::size_t>(8, icbrt(n)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sensitivity_at(f, w));
    }
}
BENCHMARK(BM_WitnessSensitivity)->Arg(512)->Arg(4096);

void BM_TruthTableBuild(benchmark::State& state) {
    const RubinsteinCyclic f = rubinstein_cyclic(
        static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_truth_table(f, 25));
    }
}
BENCHMARK(BM_TruthTableBuild)->Arg(3)->Arg(4);

void BM_GlobalSensitivityScan(benchmark::State& state) {
    const TruthTable table = build_truth_table(rubinstein_cyclic(4));
    for (auto _ : state) {
        benchmark::DoNotOptimize(global_sensitivity(table));
    }
}
BENCHMARK(BM_GlobalSensitivityScan);

void BM_BlockSensitivityPoint(benchmark::State& state) {
    const TruthTable table = build_truth_table(rubinstein_cyclic(4));
    const Word zero(16);
    for (auto _ : state) {
        benchmark::DoNotOptimize(block_sensitivity_at(table, zero));
    }
}
BENCHMARK(BM_BlockSensitivityPoint);

void BM_AssignmentOrbit(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::vector<std::pair<std::size_t, bool>> entries;
    for (std::size_t pos = 1; pos <= 8; ++pos) entries.emplace_back(pos, true);
    const PartialAssignment p(n, entries);
    const GeneratedGroup group = cyclic_group(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(assignment_orbit(group, p));
    }
}
BENCHMARK(BM_AssignmentOrbit)->Arg(256)->Arg(1024);

void BM_ZeroSideProcedure(benchmark::State& state) {
    const OrbitPattern f = theorem32_function(
        static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(zero_side_procedure(f));
    }
}
BENCHMARK(BM_ZeroSideProcedure)->Arg(100)->Arg(400);

}  // namespace

BENCHMARK_MAIN();
