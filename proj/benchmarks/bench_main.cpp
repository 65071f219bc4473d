#include <benchmark/benchmark.h>

#include "aztec/exact_count.hpp"
#include "aztec/regimes.hpp"
#include "aztec/regions.hpp"
#include "aztec/sampler.hpp"

namespace {

aztec::RegionSpec full_spec(int N) {
    aztec::RegionSpec s;
    s.N = N;
    s.variant = aztec::Variant::full;
    return s;
}

void BM_determinant_full(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    mpq_class a(1569, 2000);
    auto g = aztec::build_graph(aztec::build_region(full_spec(N)), a);
    for (auto _ : state)
        benchmark::DoNotOptimize(aztec::count_determinant(g).logValue);
}
BENCHMARK(BM_determinant_full)->Arg(8)->Arg(16)->Arg(24)
    ->Unit(benchmark::kMillisecond);

void BM_enumerate_small(benchmark::State& state) {
    auto g = aztec::build_graph(aztec::build_region(full_spec(4)),
                                mpq_class(1, 2));
    for (auto _ : state)
        benchmark::DoNotOptimize(aztec::count_enumerate(g).value.get_d());
}
BENCHMARK(BM_enumerate_small)->Unit(benchmark::kMicrosecond);

void BM_shuffle_sample(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            aztec::vertical_count(aztec::sample_tiling(N, 0.7845, seed++)));
}
BENCHMARK(BM_shuffle_sample)->Arg(16)->Arg(64)->Arg(128)
    ->Unit(benchmark::kMillisecond);

void BM_c_coefficients(benchmark::State& state) {
    double C2, C1, C0;
    for (auto _ : state) {
        aztec::C_coefficients(0.25, 0.7, 0.7845, 1, C2, C1, C0);
        benchmark::DoNotOptimize(C0);
    }
}
BENCHMARK(BM_c_coefficients)->Unit(benchmark::kMillisecond);

void BM_solve_z0(benchmark::State& state) {
    aztec::PhaseParams p;
    p.mu = 0.7;
    p.kappa = 0.25;
    p.a = 0.7845;
    for (auto _ : state)
        benchmark::DoNotOptimize(aztec::solve_z0(p).z0);
}
BENCHMARK(BM_solve_z0)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
