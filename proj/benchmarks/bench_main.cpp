#include <benchmark/benchmark.h>

#include "satake/hecke.hpp"
#include "satake/quotient.hpp"
#include "satake/symfun.hpp"

using namespace satake;

static void BM_HallLittlewood(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Partition lambda(n);
    for (int i = 0; i < n; ++i) lambda[i] = n - i;
    QuadScalar t(make_rat(1, 3));
    for (auto _ : state) benchmark::DoNotOptimize(hall_littlewood(lambda, t));
}
BENCHMARK(BM_HallLittlewood)->Arg(2)->Arg(3)->Arg(4);

static void BM_BuildQuotient(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    OrbitPoint chi(n);
    for (int i = 0; i < n; ++i) chi[i] = QuadScalar(i + 2);
    for (auto _ : state) benchmark::DoNotOptimize(build_quotient(chi, 3));
}
BENCHMARK(BM_BuildQuotient)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_Multiply(benchmark::State& state) {
    const unsigned long p = 3;
    HeckeElement a = HeckeElement::basis({2, 1, 0}, p);
    HeckeElement b = HeckeElement::basis({1, 1, 0}, p);
    for (auto _ : state) benchmark::DoNotOptimize(multiply(a, b));
}
BENCHMARK(BM_Multiply)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
