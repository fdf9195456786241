#include <benchmark/benchmark.h>

#include "lfca/conformance.hpp"
#include "lfca/contour.hpp"
#include "lfca/sampling.hpp"

namespace {

using namespace lfca;

const Point kOrigin{};

void BM_MittagLeffler(benchmark::State& state) {
    const Alpha alpha(static_cast<double>(state.range(0)) / 10.0);
    const FractalComplex w{1.2, 0.7};
    for (auto _ : state) benchmark::DoNotOptimize(mittag_leffler(alpha, w));
}
BENCHMARK(BM_MittagLeffler)->Arg(3)->Arg(5)->Arg(10);

void BM_MittagLefflerKernel(benchmark::State& state) {
    const Alpha alpha(0.5);
    const MittagLefflerKernel kernel(alpha);
    for (auto _ : state) benchmark::DoNotOptimize(frac_polar(FractalPolar(0.9, 3.0), kernel));
}
BENCHMARK(BM_MittagLefflerKernel);

void BM_SeriesMultiply(benchmark::State& state) {
    Rng rng(1);
    const Alpha alpha(0.7);
    const int degree = static_cast<int>(state.range(0));
    const FractalSeries f = random_series(rng, alpha, kOrigin, -degree / 2, degree);
    const FractalSeries g = random_series(rng, alpha, kOrigin, -degree / 2, degree);
    for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_SeriesMultiply)->Arg(8)->Arg(32)->Arg(128);

void BM_Quadrature(benchmark::State& state) {
    Rng rng(2);
    const Alpha alpha(0.5);
    const FractalSeries f = random_series(rng, alpha, kOrigin, -3, 8);
    const CircleContour c(kOrigin, 1.0);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(quadrature_diagnostic(f, c, n));
}
BENCHMARK(BM_Quadrature)->Arg(256)->Arg(1024)->Arg(4096);

void BM_ConformanceRow(benchmark::State& state) {
    ConformanceOptions options;
    options.parallel = false;
    for (auto _ : state) benchmark::DoNotOptimize(conformance_matrix({0.5}, options));
}
BENCHMARK(BM_ConformanceRow)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
