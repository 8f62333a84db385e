// Serial reference vs OpenMP kernels. Arg(0) runs the serial variant, Arg(1) the OpenMP one.

#include <cmath>

#include <benchmark/benchmark.h>

#include "gausskern/error_analysis.hpp"
#include "gausskern/gaussian_approx.hpp"
#include "gausskern/kernels.hpp"

using namespace gausskern;
namespace k = gausskern::kernels;

namespace
{

k::Backend backend_of(const benchmark::State& state)
{
    return state.range(0) == 0 ? k::Backend::serial : k::Backend::openmp;
}

const CosineSumApprox& fixture()
{
    static const CosineSumApprox a = approximate(GaussianTarget(1.25, 0.625), 16);
    return a;
}

void BM_GaussianGram(benchmark::State& state)
{
    const auto nodes = k::linspace(-9.0, 9.0, static_cast<int>(state.range(1)));
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(k::gaussian_gram(nodes, 0.4, backend_of(state)));
    }
}

void BM_CosineSum(benchmark::State& state)
{
    const auto& a = fixture();
    const auto ts = k::linspace(-2.0 * M_PI, 2.0 * M_PI, static_cast<int>(state.range(1)));
    std::vector<double> out(ts.size());
    for (auto _ : state)
    {
        k::cosine_sum(a.freqs, a.coeffs, ts, out, backend_of(state));
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(ts.size()));
}

void BM_MaxDeviation(benchmark::State& state)
{
    const auto& a = fixture();
    const auto ts = k::linspace(-2.0 * M_PI, 2.0 * M_PI, static_cast<int>(state.range(1)));
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(k::max_abs_deviation(a.freqs, a.coeffs, 1.25, ts, backend_of(state)));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(ts.size()));
}

void BM_IntegratePanels(benchmark::State& state)
{
    static const CosineSumApprox a = approximate(GaussianTarget(0.8, 1.0), 6);
    auto f = [&](double t) {
        const double d = std::exp(-t * t / 1.6) - a(t);
        return d * d * std::exp(-t * t / 2.0);
    };
    const double half = oracle_half_width(1.0);
    const auto breaks = k::linspace(-half, half, static_cast<int>(state.range(1)) + 1);
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(k::integrate_panels(f, breaks, 1e-11, 12, backend_of(state)));
    }
}

void BM_ErrorSweep(benchmark::State& state)
{
    const GaussianTarget target(0.8, 1.0);
    for (auto _ : state)
    {
        auto rows = k::parallel_map(
            1, static_cast<int>(state.range(1)),
            [&](int n) { return oracle_error(approximate(target, n)).value; }, backend_of(state));
        benchmark::DoNotOptimize(rows.data());
    }
}

} // namespace

BENCHMARK(BM_GaussianGram)->ArgsProduct({{0, 1}, {60, 200}});
BENCHMARK(BM_CosineSum)->ArgsProduct({{0, 1}, {10000, 1000000}});
BENCHMARK(BM_MaxDeviation)->ArgsProduct({{0, 1}, {10000, 1000000}});
BENCHMARK(BM_IntegratePanels)->ArgsProduct({{0, 1}, {64}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ErrorSweep)->ArgsProduct({{0, 1}, {18}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
