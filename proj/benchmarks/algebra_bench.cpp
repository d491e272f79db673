#include <benchmark/benchmark.h>

#include "loopbv/axioms.hpp"
#include "loopbv/series.hpp"
#include "loopbv/spectral.hpp"

namespace {

using namespace loopbv;

void BM_DeltaTable(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const BvAlgebra alg(AlgebraConfig(n, BvCase::B_wxvw));
    for (auto _ : state)
        benchmark::DoNotOptimize(delta_table(alg, std::nullopt, -(2 * n + 1), 12 * n));
}
BENCHMARK(BM_DeltaTable)->DenseRange(1, 5);

void BM_DeltaOracle(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const BvAlgebra alg(AlgebraConfig(n, BvCase::A_vxw));
    const auto window = basis_window(alg.config(), std::nullopt, -(2 * n + 1), 12 * n);
    for (auto _ : state)
        for (const Monomial& m : window)
            benchmark::DoNotOptimize(alg.delta_oracle(m));
}
BENCHMARK(BM_DeltaOracle)->DenseRange(1, 5);

void BM_ThirdPage(benchmark::State& state)
{
    const SSConfig cfg{BvAlgebra(AlgebraConfig(3, BvCase::A_vxw)), Component::g, static_cast<int>(state.range(0))};
    for (auto _ : state)
        benchmark::DoNotOptimize(e3_page(cfg));
}
BENCHMARK(BM_ThirdPage)->RangeMultiplier(4)->Range(25, 1600);

void BM_VerifyCollapse(benchmark::State& state)
{
    const BvAlgebra alg(AlgebraConfig(static_cast<int>(state.range(0)), BvCase::B_w));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_collapse(alg, 100));
}
BENCHMARK(BM_VerifyCollapse)->DenseRange(1, 5, 2);

void BM_AxiomCheck(benchmark::State& state)
{
    const BvAlgebra alg(AlgebraConfig(static_cast<int>(state.range(0)), BvCase::A_v));
    const AxiomCheckOptions options = default_axiom_options(alg.config());
    for (auto _ : state)
        benchmark::DoNotOptimize(check_bv_axioms(alg, options));
}
BENCHMARK(BM_AxiomCheck)->DenseRange(1, 3);

void BM_Expand(benchmark::State& state)
{
    const RationalSeries r = westerland_total(4);
    for (auto _ : state)
        benchmark::DoNotOptimize(expand(r, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Expand)->RangeMultiplier(10)->Range(100, 100000);

void BM_AverageAlternating(benchmark::State& state)
{
    const RationalSeries r = lg_series(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(average_alternating(r));
}
BENCHMARK(BM_AverageAlternating)->DenseRange(1, 8, 7);

} // namespace
