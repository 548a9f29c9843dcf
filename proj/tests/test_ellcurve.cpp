#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trisum/factored.hpp"
#include "trisum/tate.hpp"
#include "trisum/trace.hpp"

#include <cstdio>
#include <random>

using namespace trisum;

namespace {

WeierstrassModel W(long a1, long a2, long a3, long a4, long a6) {
    return {Rational(a1), Rational(a2), Rational(a3), Rational(a4), Rational(a6)};
}

std::mt19937_64 rng(424242);

// full-enumeration point count over F_ell, the independent oracle
long count_all(const WeierstrassModel& E, long ell) {
    long cnt = 1;
    auto red = [&](const Rational& q) {
        Integer d = mod_pos(denom(q), Integer(ell));
        return to_long(mod_pos(numer(q) * mod_inverse(d, Integer(ell)), Integer(ell)));
    };
    long a1 = red(E.a1), a2 = red(E.a2), a3 = red(E.a3), a4 = red(E.a4), a6 = red(E.a6);
    for (long x = 0; x < ell; ++x)
        for (long y = 0; y < ell; ++y) {
            long lhs = (y * y + a1 * x * y + a3 * y) % ell;
            long rhs = (((x + a2) * x + a4) % ell * x + a6) % ell;
            if ((lhs - rhs) % ell == 0) ++cnt;
        }
    return cnt;
}

}  // namespace

TEST_CASE("invariants") {
    WeierstrassModel E = W(0, 0, 0, 0, 1);  // y^2 = x^3 + 1
    Invariants I = invariants(E);
    CHECK(I.c4 == 0);
    CHECK(I.disc == -432);
    CHECK(I.c4 * I.c4 * I.c4 - I.c6 * I.c6 == 1728 * I.disc);
    CHECK(j_invariant(E) == 0);

    WeierstrassModel S = W(0, 0, 0, 0, 0);
    CHECK(is_singular(S));
    CHECK_THROWS_AS(j_invariant(S), std::domain_error);
}

TEST_CASE("c4^3 - c6^2 = 1728 disc on random models") {
    std::uniform_int_distribution<long> dc(-20, 20);
    for (int i = 0; i < 200; ++i) {
        WeierstrassModel E = W(dc(rng), dc(rng), dc(rng), dc(rng), dc(rng));
        Invariants I = invariants(E);
        CHECK(I.c4 * I.c4 * I.c4 - I.c6 * I.c6 == 1728 * I.disc);
    }
}

TEST_CASE("transform") {
    WeierstrassModel E = W(0, 0, 0, 0, 1);
    CHECK(transform(E, 1, 0, 0, 0) == E);
    WeierstrassModel F = transform(E, 2, 0, 0, 0);
    CHECK(invariants(F).disc * ipow(2, 12) == invariants(E).disc);
    // long <-> short roundtrip keeps j
    WeierstrassModel G = W(1, -1, 1, -10, -20);
    WeierstrassModel H = transform(G, rat(1, 2), 3, 5, -7);
    CHECK(j_invariant(G) == j_invariant(H));
    CHECK_THROWS_AS(transform(E, 0, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("quadratic twist") {
    WeierstrassModel E = W(1, 0, 1, 4, -6);
    CHECK(j_invariant(quadratic_twist(E, 1)) == j_invariant(E));
    CHECK(j_invariant(quadratic_twist(E, -5)) == j_invariant(E));
    WeierstrassModel T2 = quadratic_twist(quadratic_twist(E, 7), 7);
    CHECK(j_invariant(T2) == j_invariant(E));
    CHECK_THROWS_AS(quadratic_twist(W(0, 0, 0, 0, 0), 2), std::domain_error);
}

TEST_CASE("tate on curves with known reduction") {
    // 11a1: disc = -11^5, type I5 at 11
    {
        ReductionData R = tate_reduction(W(0, -1, 1, -10, -20), 11);
        CHECK(R.type == Kodaira::In);
        CHECK(R.n == 5);
        CHECK(R.f == 1);
        CHECK(R.v_disc == 5);
    }
    // y^2 = x^3 + p: type II at p >= 5
    for (long p : {5L, 7L, 13L}) {
        ReductionData R = tate_reduction(W(0, 0, 0, 0, p), p);
        CHECK(R.type == Kodaira::II);
        CHECK(R.f == 2);
        CHECK(R.additive());
    }
    // y^2 = x^3 - p^2 x: type I0* at p >= 5 (v(disc) = 6)
    for (long p : {5L, 11L}) {
        ReductionData R = tate_reduction(W(0, 0, 0, -p * p, 0), p);
        CHECK(R.type == Kodaira::I0Star);
        CHECK(R.f == 2);
    }
    // good reduction
    {
        ReductionData R = tate_reduction(W(0, -1, 1, -10, -20), 7);
        CHECK(R.good());
        CHECK(R.type == Kodaira::I0);
    }
}

TEST_CASE("conductors of standard curves") {
    struct Row {
        WeierstrassModel E;
        long N;
    };
    const Row rows[] = {
        {W(0, -1, 1, -10, -20), 11},  {W(1, 0, 1, 4, -6), 14},  {W(1, 1, 1, -10, -10), 15},
        {W(1, -1, 1, -1, -14), 17},   {W(0, 1, 1, -9, -15), 19}, {W(0, 0, 1, 0, -7), 27},
        {W(0, 0, 0, 4, 0), 32},       {W(0, 0, 0, 0, 1), 36},   {W(0, 0, 1, -1, 0), 37},
        {W(1, -1, 0, -2, -1), 49},  {W(0, -1, 0, -4, 4), 24}, {W(0, 1, 0, 4, 4), 20},
    };
    for (const auto& row : rows) CHECK(conductor(row.E) == row.N);
}

TEST_CASE("conductor invariance under change of model") {
    std::uniform_int_distribution<long> dc(-6, 6);
    std::uniform_int_distribution<long> du(1, 3);
    int done = 0;
    for (int i = 0; i < 60 && done < 25; ++i) {
        WeierstrassModel E = W(dc(rng) & 1, dc(rng), dc(rng) & 1, dc(rng), dc(rng));
        if (is_singular(E)) continue;
        Integer N = conductor(E);
        WeierstrassModel F = transform(E, Rational(du(rng)), Rational(dc(rng)),
                                       Rational(dc(rng)), Rational(dc(rng)));
        CHECK(conductor(F) == N);
        ++done;
    }
    CHECK(done == 25);
}

TEST_CASE("Ogg relation v(disc) = f + m - 1") {
    std::uniform_int_distribution<long> dc(-15, 15);
    int checked = 0;
    for (int i = 0; i < 400; ++i) {
        WeierstrassModel E = W(dc(rng), dc(rng), dc(rng), dc(rng), dc(rng));
        if (is_singular(E)) continue;
        WeierstrassModel M = minimal_model(E);
        Integer disc = numer(invariants(M).disc);
        for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
            if (!divides(Integer(p), disc)) continue;
            ReductionData R = tate_reduction(M, p);
            CHECK(R.v_disc == R.f + R.components - 1);
            ++checked;
        }
    }
    CHECK(checked > 200);
}

TEST_CASE("minimal model has minimal discriminant") {
    // blow up a minimal curve and recover it
    WeierstrassModel E = W(0, -1, 1, -10, -20);
    WeierstrassModel big = transform(E, rat(1, 6), 2, 1, 3);  // u = 1/6 scales disc by 6^12
    WeierstrassModel M = minimal_model(big);
    CHECK(invariants(M).disc == invariants(E).disc);
    CHECK(conductor(big) == 11);
}

TEST_CASE("ap against the full-enumeration oracle") {
    std::uniform_int_distribution<long> dc(-10, 10);
    // y^2 = x^3 + x at ell = 5 and random good curves
    for (long ell : {3L, 5L, 7L, 11L, 13L}) {
        WeierstrassModel E = W(0, 0, 0, 1, 0);
        if (!divides(Integer(ell), numer(invariants(minimal_model(E)).disc))) {
            Integer a = ap_trace(E, ell);
            CHECK(a == ell + 1 - count_all(minimal_model(E), ell));
            CHECK(a * a <= 4 * ell);
        }
    }
    int checked = 0;
    for (int i = 0; i < 150; ++i) {
        WeierstrassModel E = W(dc(rng) & 1, dc(rng), dc(rng) & 1, dc(rng), dc(rng));
        if (is_singular(E)) continue;
        WeierstrassModel M = minimal_model(E);
        Integer disc = numer(invariants(M).disc);
        for (long ell : {2L, 3L, 5L, 7L, 11L}) {
            if (divides(Integer(ell), disc)) continue;
            CHECK(ap_trace(E, ell) == ell + 1 - count_all(M, ell));
            ++checked;
        }
    }
    CHECK(checked > 200);
}

TEST_CASE("Hasse bound on random curves") {
    std::uniform_int_distribution<long> dc(-50, 50);
    int good_checked = 0;
    for (int i = 0; i < 1000; ++i) {
        WeierstrassModel E = W(dc(rng) & 1, dc(rng), dc(rng) & 1, dc(rng), dc(rng));
        if (is_singular(E)) continue;
        long ell = std::vector<long>{3, 5, 7, 11, 13, 17, 19, 23}[i % 8];
        WeierstrassModel M = minimal_model(E);
        if (divides(Integer(ell), numer(invariants(M).disc))) continue;
        Integer a = ap_trace(E, ell);
        CHECK(a * a <= 4 * ell);
        ++good_checked;
    }
    CHECK(good_checked > 600);
}

TEST_CASE("ap at good primes is model-invariant") {
    WeierstrassModel E = W(1, 1, 1, -10, -10);  // conductor 15
    WeierstrassModel F = transform(E, rat(1, 2), 1, 2, 3);
    for (long ell : {7L, 11L, 13L, 23L}) CHECK(ap_trace(E, ell) == ap_trace(F, ell));
}

TEST_CASE("multiplicative reduction signs") {
    // 11a1 at 11: a_11 = 1 (split); 15a1: a_3 = -1, a_5 = 1
    CHECK(ap_trace(W(0, -1, 1, -10, -20), 11) == 1);
    CHECK(ap_trace(W(1, 1, 1, -10, -10), 3) == -1);
    CHECK(ap_trace(W(1, 1, 1, -10, -10), 5) == 1);
    // additive => 0
    CHECK(ap_trace(W(0, 0, 0, 0, 5), 5) == 0);
}

TEST_CASE("known a_ell of 11a1 and 37a1") {
    WeierstrassModel c11 = W(0, -1, 1, -10, -20);
    CHECK(ap_trace(c11, 2) == -2);
    CHECK(ap_trace(c11, 3) == -1);
    CHECK(ap_trace(c11, 5) == 1);
    CHECK(ap_trace(c11, 7) == -2);
    CHECK(ap_trace(c11, 13) == 4);
    WeierstrassModel c37 = W(0, 0, 1, -1, 0);
    CHECK(ap_trace(c37, 2) == -2);
    CHECK(ap_trace(c37, 3) == -3);
    CHECK(ap_trace(c37, 5) == -2);
    CHECK(ap_trace(c37, 7) == -1);
}

TEST_CASE("trace table caching round trip") {
    TraceTable tab;
    WeierstrassModel E = W(0, -1, 1, -10, -20);
    Integer a = tab.get_or_compute(E, 13);
    CHECK(a == 4);
    CHECK(tab.size() == 1);
    std::string path = "trace_cache_test.tmp";
    tab.save(path);
    TraceTable tab2;
    tab2.load(path);
    CHECK(tab2.size() == 1);
    CHECK(tab2.get_or_compute(E, 13) == 4);
    std::remove(path.c_str());
}

TEST_CASE("budget and integrality guards") {
    WeierstrassModel E = W(0, -1, 1, -10, -20);
    CHECK_THROWS_AS(ap_trace(E, Integer("1000003"), 100000), std::invalid_argument);
    CHECK_THROWS_AS(tate_reduction({rat(1, 2), Rational(0), Rational(0), Rational(0),
                                    Rational(1)},
                                   2),
                    std::invalid_argument);
}
