#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trisum/modsym.hpp"
#include "trisum/polyfactor.hpp"
#include "trisum/sieve.hpp"
#include "trisum/trace.hpp"

#include <cstdio>
#include <random>
#include <sstream>

using namespace trisum;

namespace {

std::mt19937_64 rng(990131);

// ---- independent brute-force reimplementation (the test oracle) ----
// Straight from the defining congruence conditions, sharing no code with the
// sieve: discriminant by direct invariants of the specialized model, traces by
// full point enumeration over F_ell.

Integer oracle_trace(const WeierstrassModel& E, long ell) {
    auto red = [&](const Rational& q) {
        Integer d = mod_pos(denom(q), Integer(ell));
        return to_long(mod_pos(numer(q) * mod_inverse(d, Integer(ell)), Integer(ell)));
    };
    long a1 = red(E.a1), a2 = red(E.a2), a3 = red(E.a3), a4 = red(E.a4), a6 = red(E.a6);
    long cnt = 1;
    for (long x = 0; x < ell; ++x)
        for (long y = 0; y < ell; ++y) {
            long lhs = (y * y + a1 * x * y + a3 * y) % ell;
            long rhs = (((x + a2) * x + a4) % ell * x + a6) % ell;
            if ((lhs - rhs) % ell == 0) ++cnt;
        }
    return Integer(ell + 1 - cnt);
}

bool oracle_bad(const FreyFamily& fam, long a, long ell) {
    WeierstrassModel E = fam.at(a);
    Rational d = invariants(E).disc;
    if (d == 0) return true;
    return divides(Integer(ell), numer(d));
}

Integer oracle_R(const FreyFamily& fam, const NewformClass& form, long a, long ell) {
    PolyZ m = form.m_ell(ell);
    if (oracle_bad(fam, a, ell))
        return iabs(m.eval(Integer(ell + 1)) * m.eval(Integer(-ell - 1)));
    return iabs(m.eval(oracle_trace(fam.at(a), ell)));
}

Integer oracle_U(const FreyFamily& fE, const FreyFamily& fF, const NewformClass& f,
                 const NewformClass& g, const std::vector<long>& ells) {
    Integer u(0);
    for (long ell : ells) {
        Integer T(ell);
        for (long a = 0; a < ell; ++a)
            T *= igcd(oracle_R(fE, f, a, ell), oracle_R(fF, g, a, ell));
        u = igcd(u, T);
    }
    return u;
}

NewformClass synthetic_class(long level, long degree, const std::vector<long>& ells) {
    NewformClass f;
    f.id = "synthetic";
    f.level = level;
    f.degree = degree;
    for (long ell : ells) {
        // monic degree-d polynomial with roots in the Hasse range
        std::uniform_int_distribution<long> da(-to_long(isqrt(Integer(4 * ell))),
                                               to_long(isqrt(Integer(4 * ell))));
        PolyZ m({Integer(1)});
        for (long i = 0; i < degree; ++i) m = m * PolyZ({Integer(-da(rng)), Integer(1)});
        f.eigen[ell] = m;
    }
    return f;
}

WeierstrassModel F1_curve() {
    return {Rational(0), Rational(0), Rational(1), Rational(405), Rational(22673)};
}

}  // namespace

TEST_CASE("local term basics") {
    FreyFamily fam = frey_k6_family();
    // a rational form with the same trace gives a zero term (good residue:
    // the sextic at 2 is 794, prime to 5)
    long ell = 5, a = 2;
    REQUIRE(!oracle_bad(fam, a, ell));
    NewformClass match;
    match.id = "match";
    match.level = 91557;
    match.degree = 1;
    match.eigen[ell] = PolyZ({Integer(-ap_trace(fam.at(a), ell)), Integer(1)});
    CHECK(local_term(fam, a, ell, match) == 0);
    // degree-1 norm in the bad case: |(l+1)^2 - c^2|; sextic(1) = 65 = 5*13,
    // so residue 1 is bad at 13
    NewformClass c3;
    c3.id = "c3";
    c3.level = 91557;
    c3.degree = 1;
    c3.eigen[13] = PolyZ({Integer(-3), Integer(1)});
    REQUIRE(oracle_bad(fam, 1, 13));
    CHECK(local_term(fam, 1, 13, c3) == iabs(Integer(14 * 14 - 9)));
    CHECK_THROWS_AS(local_term(fam, 20, 13, c3), std::invalid_argument);
}

TEST_CASE("B_11 for the k6 family and the first rational class") {
    NewformClass f1 = newform_from_curve("F1", 91557, F1_curve());
    Integer B = single_bound_Bl(frey_k6_family(), f1, 11);
    CHECK(B == ipow(5, 4) * ipow(7, 3) * 11);
    FactoredInteger rep = single_bound_B(frey_k6_family(), f1, {11});
    CHECK(rep.str() == "5^4 * 7^3 * 11");
}

TEST_CASE("exponent obstructions") {
    PolyZ sextic = k6_sextic();
    CHECK(exponent_obstruction(sextic, 7, 3));
    CHECK(exponent_obstruction(sextic, 3, 2));
    CHECK(!exponent_obstruction(PolyZ({Integer(0), Integer(1)}), 7, 1));
    // value set of the sextic mod 7 is exactly {2, 3}
    std::set<Integer> vals;
    for (Integer t = 0; t < 7; ++t) vals.insert(sextic.eval_mod(t, 7));
    CHECK(vals == std::set<Integer>{2, 3});
    // and mod 3 it is constant 2
    std::set<Integer> v3;
    for (Integer t = 0; t < 3; ++t) v3.insert(sextic.eval_mod(t, 3));
    CHECK(v3 == std::set<Integer>{2});
}

TEST_CASE("Cprime division") {
    ModSymEngine eng;
    PolyZ C = eng.new_charpoly(350, 11);
    REQUIRE(C.degree() == 10);
    // factor out the six rational classes
    std::vector<Integer> traces;
    for (const auto& pf : factor_monic(C))
        if (pf.factor.degree() == 1)
            for (unsigned long i = 0; i < pf.multiplicity; ++i)
                traces.push_back(-pf.factor[0]);
    REQUIRE(traces.size() == 6);
    PolyZ Cp = heckepoly_Cprime(C, traces);
    CHECK(Cp.degree() == 4);
    // a non-root linear factor fails
    CHECK_THROWS_AS(heckepoly_Cprime(C, {Integer(999)}), std::invalid_argument);
}

TEST_CASE("hecke bound with no irrational forms is the bare ell") {
    // Cprime = 1 (empty quotient)
    PolyZ one = PolyZ::constant(1);
    CHECK(heckepoly_Bl(one, 5) == 5);
    CHECK(heckepoly_Bl(one, 13, true) == 13);
    CHECK(heckepoly_B2(one) == 1);
    CHECK_THROWS_AS(heckepoly_Bl(one, 3), std::invalid_argument);
    CHECK_THROWS_AS(heckepoly_Bl(one, 3391), std::invalid_argument);
}

TEST_CASE("hecke bound against a brute-force recomputation") {
    FreyFamily fam = frey_k6_family();
    std::uniform_int_distribution<long> dc(-6, 6);
    for (int trial = 0; trial < 60; ++trial) {
        // random small monic Cprime
        long d = 1 + trial % 3;
        std::vector<Integer> c(d + 1);
        for (long i = 0; i < d; ++i) c[i] = dc(rng);
        c[d] = 1;
        PolyZ Cp(std::move(c));
        for (long ell : {5L, 7L, 11L}) {
            Integer got = heckepoly_Bl(Cp, ell);
            Integer want(ell);
            for (long a = 0; a < ell && want != 0; ++a) {
                if (oracle_bad(fam, a, ell))
                    want *= Cp.eval(Integer(ell + 1)) * Cp.eval(Integer(-ell - 1));
                else
                    want *= Cp.eval(oracle_trace(fam.at(a), ell));
            }
            CHECK(got == want);
        }
    }
}

TEST_CASE("multi-Frey agreement with the brute-force oracle") {
    std::vector<long> ells = {11, 13};
    const long alphas[] = {1, 2, 5, 10};
    int trials = 0;
    for (int t = 0; t < 1000; ++t) {
        long alpha = alphas[t % 4];
        FreyFamily fE = frey_k5_E_family(alpha);
        FreyFamily fF = frey_k5_F_family(alpha);
        NewformClass f = synthetic_class(100, 1 + t % 2, ells);
        NewformClass g = synthetic_class(200, 1 + (t / 2) % 2, ells);
        FactoredInteger got = multi_frey_U(fE, fF, f, g, ells);
        Integer want = oracle_U(fE, fF, f, g, ells);
        CHECK(got.value() == want);
        ++trials;
    }
    CHECK(trials == 1000);
}

TEST_CASE("single-Frey bound agrees with the oracle and divides per-ell bounds") {
    std::vector<long> ells = {11, 13, 17};
    for (int t = 0; t < 30; ++t) {
        long alpha = std::vector<long>{1, 2, 5, 10}[t % 4];
        FreyFamily fE = frey_k5_E_family(alpha);
        NewformClass f = synthetic_class(100, 1 + t % 2, ells);
        FactoredInteger B = single_bound_B(fE, f, ells);
        for (long ell : ells) {
            Integer Bl = single_bound_Bl(fE, f, ell);
            Integer want(ell);
            for (long a = 0; a < ell && want != 0; ++a) want *= oracle_R(fE, f, a, ell);
            CHECK(Bl == want);
            if (!B.zero && Bl != 0) CHECK(divides(B.value(), Bl));
        }
    }
}

TEST_CASE("U divides the single-Frey accumulations on the same range") {
    std::vector<long> ells = {11, 13};
    FreyFamily fE = frey_k5_E_family(10);
    FreyFamily fF = frey_k5_F_family(10);
    NewformClass f = synthetic_class(70, 2, ells);
    NewformClass g = synthetic_class(134400, 2, ells);
    FactoredInteger U = multi_frey_U(fE, fF, f, g, ells);
    Integer bE(0), bF(0);
    for (long ell : ells) {
        bE = igcd(bE, single_bound_Bl(fE, f, ell));
        bF = igcd(bF, single_bound_Bl(fF, g, ell));
    }
    if (!U.zero) {
        if (bE != 0) CHECK(divides(U.value(), bE));
        if (bF != 0) CHECK(divides(U.value(), bF));
    }
}

TEST_CASE("planted congruence: the planted prime divides every per-ell bound") {
    const Integer p(19);
    FreyFamily fam = frey_k6_family();
    std::uniform_int_distribution<long> dd(-1, 1);
    for (long x0 : {1L, 3L, 5L}) {
        NewformClass f;
        f.id = "planted";
        f.level = 91557;
        f.degree = 1;
        std::vector<long> ells = {5, 7, 11, 13};
        for (long ell : ells) {
            // the congruence a planted solution would force mod p: the trace at
            // good residues, ell+1 at multiplicative ones
            Integer base = oracle_bad(fam, x0 % ell, ell) ? Integer(ell + 1)
                                                          : ap_trace(fam.at(Integer(x0)), ell);
            f.eigen[ell] = PolyZ({Integer(-(base + p * dd(rng))), Integer(1)});
        }
        for (long ell : ells) {
            Integer B = single_bound_Bl(fam, f, ell);
            CHECK(divides(p, B));  // B = 0 counts as divisible
        }
    }
    // multi-Frey variant: both sides planted at the same x0
    for (long x0 : {3L, 11L}) {
        long alpha = to_long(igcd(Integer(x0), Integer(10)));
        FreyFamily fE = frey_k5_E_family(alpha);
        FreyFamily fF = frey_k5_F_family(alpha);
        NewformClass f, g;
        f.level = 100;
        g.level = 200;
        f.degree = g.degree = 1;
        f.id = "plantE";
        g.id = "plantF";
        std::vector<long> ells = {13, 17};
        for (long ell : ells) {
            f.eigen[ell] = PolyZ({Integer(-(ap_trace(fE.at(Integer(x0)), ell) + p * dd(rng))),
                                  Integer(1)});
            g.eigen[ell] = PolyZ({Integer(-(ap_trace(fF.at(Integer(x0)), ell) + p * dd(rng))),
                                  Integer(1)});
        }
        FactoredInteger U = multi_frey_U(fE, fF, f, g, ells);
        CHECK((U.zero || divides(p, U.value())));
    }
}

TEST_CASE("newform data file round trip") {
    std::vector<long> ells = {11, 13};
    NewformClass f = synthetic_class(91557, 2, ells);
    f.id = "c1";
    std::ostringstream os;
    write_newform_data(os, {f});
    std::istringstream is(os.str());
    auto back = read_newform_data(is);
    REQUIRE(back.size() == 1);
    CHECK(back[0].id == "c1");
    CHECK(back[0].level == 91557);
    CHECK(back[0].degree == 2);
    CHECK(back[0].m_ell(11) == f.m_ell(11));
    CHECK(back[0].m_ell(13) == f.m_ell(13));
    // malformed data is rejected
    std::istringstream bad("class id=x N=10 d=2\nap ell=3 minpoly=1,1\n");
    CHECK_THROWS_AS(read_newform_data(bad), std::runtime_error);
}

TEST_CASE("admissible prime sets") {
    auto e5 = admissible_ells_k5_E();
    CHECK(e5.front() == 3);
    for (long p : e5) {
        CHECK(p != 2);
        CHECK(p != 5);
        CHECK(p != 7);
    }
    auto f5 = admissible_ells_k5_F();
    CHECK(f5.front() == 11);
    auto k6 = admissible_ells_k6();
    CHECK(k6.front() == 2);
    for (long p : k6) CHECK(p != 3);
    CHECK(k6.back() == 97);
}

TEST_CASE("ingested heckepoly cache drives the full bound pipeline") {
    // synthetic level-91557 cache: C_ell = prod (t - a_ell(F_i)) * (extra quadratic),
    // written to disk in the ingestion format and read back through the engine
    std::vector<WeierstrassModel> curves = {
        {Rational(0), Rational(0), Rational(1), Rational(405), Rational(22673)},
        {Rational(0), Rational(0), Rational(1), Rational(45), Rational(-840)},
        {Rational(0), Rational(0), Rational(1), Rational(-42), Rational(-104)},
        {Rational(0), Rational(0), Rational(1), Rational(-378), Rational(2801)}};
    const long N = 91557;
    HeckePolyCache cache;
    std::vector<long> ells = {2, 5, 7, 11};
    for (long ell : ells) {
        PolyZ C = PolyZ::constant(1);
        for (const auto& E : curves) C = C * PolyZ({Integer(-ap_trace(E, ell)), Integer(1)});
        C = C * PolyZ({Integer(-1), Integer(1)}) * PolyZ({Integer(2), Integer(1)});
        cache.put(N, ell, C);
    }
    std::string path = "hecke_ingest_test.tmp";
    cache.save(path);

    ModSymEngine eng;
    eng.cache().load(path);
    std::vector<std::pair<long, Integer>> bounds;
    for (long ell : ells) {
        PolyZ C = eng.new_charpoly(N, ell);  // cache hit, no space build
        std::vector<Integer> traces;
        for (const auto& E : curves) traces.push_back(ap_trace(E, ell));
        PolyZ Cp = heckepoly_Cprime(C, traces);
        CHECK(Cp.degree() == 2);
        Integer B = (ell == 2) ? heckepoly_B2(Cp) : heckepoly_Bl(Cp, ell);
        bounds.emplace_back(ell, B);
    }
    // B_2 = C'(2) = (2 - 1)(2 + 2) = 4
    CHECK(bounds[0].second == 4);
    SieveReport rep = SieveReport::accumulate("synthetic-91557", bounds);
    CHECK(!rep.accumulated.zero);
    CHECK(divides(rep.accumulated.value(), bounds[0].second));
    std::remove(path.c_str());
}

TEST_CASE("sieve report accumulation") {
    std::vector<std::pair<long, Integer>> bounds = {
        {11, ipow(5, 4) * ipow(7, 3) * 11}, {13, Integer(5 * 7 * 13 * 4)}};
    SieveReport rep = SieveReport::accumulate("F1", bounds, 11);
    CHECK(rep.accumulated.value() == 35);
    CHECK(rep.surviving_primes.empty());
    CHECK(rep.per_ell.size() == 2);
    CHECK(rep.per_ell[0].second.str() == "5^4 * 7^3 * 11");
}
