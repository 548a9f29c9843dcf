#include <benchmark/benchmark.h>

#include "trisum/descent.hpp"

using namespace trisum;

namespace {

void BM_local_sieve_cell(benchmark::State& state) {
    QuinticSystem sys = build_system(10, 0);
    std::vector<long> moduli = default_sieve_moduli();
    for (auto _ : state) {
        benchmark::DoNotOptimize(local_sieve_system(sys, moduli));
    }
}
BENCHMARK(BM_local_sieve_cell);

void BM_thue_search(benchmark::State& state) {
    QuinticSystem sys = build_system(10, 0);
    long bound = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(thue_search(sys.g, Integer(1), Integer(bound)));
    }
}
BENCHMARK(BM_thue_search)->Arg(1000)->Arg(10000);

void BM_integral_points(benchmark::State& state) {
    WeierstrassModel E = small_exp_curve_p3(10);
    long bound = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bounded_integral_points(E, Integer(bound)));
    }
}
BENCHMARK(BM_integral_points)->Arg(100000)->Arg(1000000);

}  // namespace
