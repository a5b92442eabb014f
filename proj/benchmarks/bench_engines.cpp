#include <benchmark/benchmark.h>

#include "teachdim/classic_dims.hpp"
#include "teachdim/collusion.hpp"
#include "teachdim/constructions.hpp"
#include "teachdim/td_engine.hpp"

using namespace teachdim;

static void bench_argmin_warmuth(benchmark::State& state) {
    auto cls = warmuth_class();
    auto sigma = build_local_hamming(cls);
    const VersionSpace full = cls->full_set();
    for (auto _ : state) benchmark::DoNotOptimize(sigma.argmin_set(full, 0));
}
BENCHMARK(bench_argmin_warmuth);

static void bench_td_warmuth_hamming(benchmark::State& state) {
    auto cls = warmuth_class();
    auto sigma = build_local_hamming(cls);
    for (auto _ : state) benchmark::DoNotOptimize(td_of_sigma(*cls, sigma, 0).value.steps);
}
BENCHMARK(bench_td_warmuth_hamming);

static void bench_nctd_warmuth(benchmark::State& state) {
    auto cls = warmuth_class();
    for (auto _ : state) benchmark::DoNotOptimize(nctd(*cls).value);
}
BENCHMARK(bench_nctd_warmuth);

static void bench_powerset7_td(benchmark::State& state) {
    auto p7 = powerset_class(7);
    auto sigma = tree_to_local_sigma(p7, powerset7_tree());
    for (auto _ : state) benchmark::DoNotOptimize(td_of_sigma(*p7, sigma, 0).value.steps);
}
BENCHMARK(bench_powerset7_td);

static void bench_collusion_warmuth(benchmark::State& state) {
    auto cls = warmuth_class();
    auto sigma = build_local_hamming(cls);
    for (auto _ : state) benchmark::DoNotOptimize(is_collusion_free(sigma, *cls, 0).holds);
}
BENCHMARK(bench_collusion_warmuth);

BENCHMARK_MAIN();
