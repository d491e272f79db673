#include <benchmark/benchmark.h>

#include "loopbv/resonance.hpp"

namespace {

using namespace loopbv;

std::vector<GeodesicRecord> records()
{
    GeodesicRecord a;
    a.label = "a";
    a.initial_index = 1;
    a.mean_index = Rational(1);
    a.period = 4;
    a.type_numbers = {{{1, 1}, 1}, {{1, 3}, 1}, {{2, 2}, 1}};
    GeodesicRecord b;
    b.label = "b";
    b.initial_index = 0;
    b.mean_index = Rational(4, 3);
    b.period = 6;
    b.type_numbers = {{{1, 0}, 2}, {{2, 1}, 1}, {{3, 4}, 1}};
    return {a, b};
}

void BM_MorseTruncation(benchmark::State& state)
{
    const auto recs = records();
    for (auto _ : state)
        benchmark::DoNotOptimize(morse_truncation(recs, 2, static_cast<int>(state.range(0))));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MorseTruncation)->RangeMultiplier(10)->Range(100, 100000)->Complexity();

void BM_ResonanceCheck(benchmark::State& state)
{
    const auto recs = records();
    for (auto _ : state)
        benchmark::DoNotOptimize(resonance_check(recs, 2));
}
BENCHMARK(BM_ResonanceCheck);

} // namespace

BENCHMARK_MAIN();
