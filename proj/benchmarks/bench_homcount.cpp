#include <benchmark/benchmark.h>

#include "hlirred/homcount.hpp"
#include "hlirred/ksinv.hpp"

using namespace hlirred;

namespace {

const FiniteGroup& a4() {
    static FiniteGroup g = builtin_group("A4");
    return g;
}

const FiniteGroup& a5() {
    static FiniteGroup g = builtin_group("A5");
    return g;
}

Presentation pres(const char* text) { return parse_presentation(text); }

}  // namespace

static void BM_BuildA5(benchmark::State& state) {
    for (auto _ : state) {
        auto g = builtin_group("A5");
        benchmark::DoNotOptimize(g.mul_table.data());
    }
}
BENCHMARK(BM_BuildA5);

static void BM_CountTrefoilA5(benchmark::State& state) {
    auto p = pres("gens a b\nrel aba = bab\n");
    for (auto _ : state) benchmark::DoNotOptimize(count_homs(p, a5(), nullptr, 1));
}
BENCHMARK(BM_CountTrefoilA5);

static void BM_CountFreeRank3A5(benchmark::State& state) {
    auto p = pres("gens a b c\n");
    for (auto _ : state) benchmark::DoNotOptimize(count_homs(p, a5(), nullptr, 1));
}
BENCHMARK(BM_CountFreeRank3A5);

static void BM_KsOrbitsFreeRank2A5(benchmark::State& state) {
    auto p = pres("gens a b\n");
    HomCountOptions opts;
    opts.jobs = int(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ks_orbits(p, a5(), opts));
}
BENCHMARK(BM_KsOrbitsFreeRank2A5)->Arg(1)->Arg(4);

static void BM_BurnsideChain3A5(benchmark::State& state) {
    auto p = pres("gens a b c\nrel ab = ba\nrel bc = cb\n");
    for (auto _ : state) benchmark::DoNotOptimize(ks_burnside(p, a5(), 1));
}
BENCHMARK(BM_BurnsideChain3A5);

static void BM_ClassifyTrefoilA4(benchmark::State& state) {
    auto p = pres("gens a b\nrel aba = bab\n");
    for (auto _ : state) {
        auto c = classify_homs(p, a4());
        benchmark::DoNotOptimize(c.orbit_count);
    }
}
BENCHMARK(BM_ClassifyTrefoilA4);

static void BM_FiveGeneratorSearchA5(benchmark::State& state) {
    auto p = pres(
        "gens a b c d e\n"
        "rel aba = bab\n"
        "rel cdc = dcd\n"
        "rel edcba = abcde\n");
    for (auto _ : state) benchmark::DoNotOptimize(count_homs(p, a5(), nullptr, 1));
}
BENCHMARK(BM_FiveGeneratorSearchA5);

BENCHMARK_MAIN();
