#include <benchmark/benchmark.h>

#include "quartic/enumerate.hpp"
#include "quartic/families.hpp"
#include "quartic/recognize.hpp"

namespace {

using namespace quartic;

void BM_CanonicalForm(benchmark::State& state) {
    Multigraph g = line_multigraph(squared_cycle(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(5)->Arg(7)->Arg(9);

void BM_EnumerateQuarticTP(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            enumerate_quartic_tp(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateQuarticTP)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
    WalkResult walk = random_op_walk(7, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(classify(walk.graph));
}
BENCHMARK(BM_Classify)->Arg(0)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
