#include <benchmark/benchmark.h>

#include "umbral/apostol.hpp"
#include "umbral/expr.hpp"
#include "umbral/identities.hpp"
#include "umbral/series.hpp"

using namespace umbral;

static void BM_SeriesInvert(benchmark::State& state)
{
    const auto precision = static_cast<std::size_t>(state.range(0));
    const TruncatedSeries f = Rational(2) * exp_linear(1, precision) - TruncatedSeries::constant(1, precision);
    for (auto _ : state)
        benchmark::DoNotOptimize(invert(f));
}
BENCHMARK(BM_SeriesInvert)->Arg(16)->Arg(32)->Arg(64);

static void BM_SeriesRevert(benchmark::State& state)
{
    const auto precision = static_cast<std::size_t>(state.range(0));
    const TruncatedSeries f = exp_linear(1, precision) - TruncatedSeries::constant(1, precision);
    for (auto _ : state)
        benchmark::DoNotOptimize(revert(f));
}
BENCHMARK(BM_SeriesRevert)->Arg(16)->Arg(32);

static void BM_UnifiedY(benchmark::State& state)
{
    const UnifiedParams params{2, static_cast<unsigned>(state.range(1)), Rational(2), Rational(-1)};
    const auto n_max = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(unified_y(params, n_max));
}
BENCHMARK(BM_UnifiedY)->Args({12, 1})->Args({12, 3})->Args({30, 2});

static void BM_EvalBracket(benchmark::State& state)
{
    const auto ast = expr::parse("<(2*exp(t)-1)^2 | Y(8; k=1, v=1, L=2, A=1)>");
    for (auto _ : state)
        benchmark::DoNotOptimize(expr::evaluate(*ast));
}
BENCHMARK(BM_EvalBracket);

static void BM_SuiteDerivative(benchmark::State& state)
{
    ParameterGrid grid = ParameterGrid::default_grid();
    grid.n_max = 8;
    for (auto _ : state)
        benchmark::DoNotOptimize(run_suite(grid, {"check_derivative"}, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_SuiteDerivative)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
