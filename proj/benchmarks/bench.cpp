#include <benchmark/benchmark.h>

#include "cpart/genfun.hpp"
#include "cpart/ntheory.hpp"
#include "cpart/partitions.hpp"

namespace {

void BM_sieve(benchmark::State& state) {
    for (auto _ : state) {
        auto t = cpart::build_tables(static_cast<std::size_t>(state.range(0)));
        benchmark::DoNotOptimize(t.primes.size());
    }
}
BENCHMARK(BM_sieve)->Arg(100000)->Arg(1000000);

void BM_euler_transform_log(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    auto w = cpart::dirichlet_power(cpart::WeightKind::PrimeTuple, 1, n);
    for (auto _ : state) {
        auto ps = cpart::euler_transform(w, n, 0);
        benchmark::DoNotOptimize(ps.coeffs_log.back().ln_abs);
    }
}
BENCHMARK(BM_euler_transform_log)->Arg(2000)->Arg(10000);

void BM_phi_eval(benchmark::State& state) {
    auto w = cpart::dirichlet_power(cpart::WeightKind::PrimeTuple, 1, 20000);
    cpart::PhiSeries phi(w);
    double alpha = 0.125;
    for (auto _ : state) {
        auto v = phi.eval(static_cast<double>(state.range(0)), alpha);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_phi_eval)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
