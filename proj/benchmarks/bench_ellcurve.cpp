#include <benchmark/benchmark.h>

#include "trisum/frey.hpp"
#include "trisum/tate.hpp"
#include "trisum/trace.hpp"

using namespace trisum;

namespace {

void BM_ap_trace(benchmark::State& state) {
    long ell = state.range(0);
    WeierstrassModel E = frey_k6(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ap_trace(E, ell));
    }
}
BENCHMARK(BM_ap_trace)->Arg(97)->Arg(1009)->Arg(10007);

void BM_tate_at_3(benchmark::State& state) {
    WeierstrassModel E = frey_k6(9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tate_reduction(E, 3));
    }
}
BENCHMARK(BM_tate_at_3);

void BM_conductor_91557(benchmark::State& state) {
    WeierstrassModel F1{Rational(0), Rational(0), Rational(1), Rational(405), Rational(22673)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(conductor(F1));
    }
}
BENCHMARK(BM_conductor_91557);

}  // namespace
