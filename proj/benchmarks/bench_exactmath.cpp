#include <benchmark/benchmark.h>

#include "trisum/charpoly.hpp"
#include "trisum/frey.hpp"
#include "trisum/poly.hpp"

using namespace trisum;

namespace {

void BM_resultant_k6(benchmark::State& state) {
    FamilyInvariants I = family_invariants(frey_k6_family());
    PolyZ c4 = I.c4.to_polyz();
    PolyZ disc = I.disc.to_polyz();
    for (auto _ : state) {
        benchmark::DoNotOptimize(resultant(c4, disc));
    }
}
BENCHMARK(BM_resultant_k6);

void BM_resultant_sylvester_k6(benchmark::State& state) {
    FamilyInvariants I = family_invariants(frey_k6_family());
    PolyZ c4 = I.c4.to_polyz();
    PolyZ disc = I.disc.to_polyz();
    for (auto _ : state) {
        benchmark::DoNotOptimize(resultant_sylvester(c4, disc));
    }
}
BENCHMARK(BM_resultant_sylvester_k6);

void BM_charpoly_crt(benchmark::State& state) {
    long n = state.range(0);
    MatQ M(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) M.at(i, j) = Rational((i * 31 + j * 17) % 23 - 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(charpoly_exact(M));
    }
}
BENCHMARK(BM_charpoly_crt)->Arg(16)->Arg(49)->Arg(96);

}  // namespace
