// Serial vs OpenMP bulk-product kernel on synthetic stratified spaces with
// many strata. Formula evaluation is one big commutative product of
// per-stratum binomial factors, so this is the only loop worth timing.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "confchi/series.hpp"

namespace {

std::vector<confchi::EgfSeries> make_factors(std::size_t count, int order) {
    std::mt19937_64 rng(9001);
    std::vector<confchi::EgfSeries> factors;
    factors.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const auto c = static_cast<std::int64_t>(rng() % 7) - 3;
        const auto e = static_cast<std::int64_t>(rng() % 5) - 2;
        factors.push_back(confchi::binomial_series(c, e, order));
    }
    return factors;
}

void bm_product_serial(benchmark::State& state) {
    const auto factors = make_factors(static_cast<std::size_t>(state.range(0)), 16);
    for (auto _ : state) {
        benchmark::DoNotOptimize(confchi::product_serial(factors, 16));
    }
}

void bm_product_parallel(benchmark::State& state) {
    const auto factors = make_factors(static_cast<std::size_t>(state.range(0)), 16);
    for (auto _ : state) {
        benchmark::DoNotOptimize(confchi::product_parallel(factors, 16));
    }
}

} // namespace

BENCHMARK(bm_product_serial)->Arg(1 << 10)->Arg(1 << 13)->Arg(1 << 15)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_product_parallel)->Arg(1 << 10)->Arg(1 << 13)->Arg(1 << 15)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
