#include <benchmark/benchmark.h>

#include "trisum/modsym.hpp"

using namespace trisum;

namespace {

void BM_build_space(benchmark::State& state) {
    long N = state.range(0);
    for (auto _ : state) {
        ManinSymbolSpace S(N);
        benchmark::DoNotOptimize(S.cuspidal_dim());
    }
}
BENCHMARK(BM_build_space)->Arg(70)->Arg(350)->Arg(1001);

void BM_hecke_matrix(benchmark::State& state) {
    ManinSymbolSpace S(350);
    long ell = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(S.hecke_matrix(ell));
    }
}
BENCHMARK(BM_hecke_matrix)->Arg(3)->Arg(13)->Arg(31);

void BM_new_charpoly_350(benchmark::State& state) {
    for (auto _ : state) {
        ModSymEngine eng;  // fresh engine: no memoized spaces or polynomials
        benchmark::DoNotOptimize(eng.new_charpoly(350, 11));
    }
}
BENCHMARK(BM_new_charpoly_350);

}  // namespace
