#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trisum/bipoly.hpp"
#include "trisum/charpoly.hpp"
#include "trisum/factored.hpp"
#include "trisum/matrix.hpp"
#include "trisum/poly.hpp"
#include "trisum/polyfactor.hpp"

#include <random>

using namespace trisum;

namespace {

PolyZ P(std::initializer_list<long> c) {
    std::vector<Integer> v;
    for (long x : c) v.emplace_back(x);
    return PolyZ(std::move(v));
}

std::mt19937_64 rng(20240517);

PolyZ random_poly(int maxdeg, int coeff_range) {
    std::uniform_int_distribution<int> dd(0, maxdeg);
    std::uniform_int_distribution<int> dc(-coeff_range, coeff_range);
    int d = dd(rng);
    std::vector<Integer> c(d + 1);
    for (auto& x : c) x = dc(rng);
    if (c.back() == 0) c.back() = 1;
    return PolyZ(std::move(c));
}

}  // namespace

TEST_CASE("polynomial ring basics") {
    PolyZ f = P({1, 2, 1});   // (t+1)^2
    PolyZ g = P({-1, 0, 1});  // t^2 - 1
    CHECK(f.degree() == 2);
    CHECK((f * g).degree() == 4);
    CHECK(f.eval(Integer(3)) == 16);
    CHECK(poly_gcd(f, g) == P({1, 1}));
    CHECK((f * g).divexact(f) == g);
    CHECK_THROWS_AS(g.divexact(P({1, 1, 1})), std::domain_error);
    CHECK(PolyZ::parse("1,2,1") == f);
    CHECK(f.csv() == "1,2,1");
}

TEST_CASE("resultants: pinned examples") {
    CHECK(resultant(P({-1, 1}), P({1, 1})) == 2);       // Res(t-1, t+1)
    CHECK(resultant(P({1, 0, 1}), P({-1, 0, 1})) == 4); // roots +-i vs +-1
    CHECK_THROWS_AS(resultant(PolyZ(), P({1, 1})), std::domain_error);
}

TEST_CASE("resultants: swap symmetry and Sylvester oracle") {
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        PolyZ p = random_poly(5, 8), q = random_poly(5, 8);
        if (p.is_zero() || q.is_zero()) continue;
        Integer r1 = resultant(p, q);
        Integer r2 = resultant(q, p);
        Integer sign = ((p.degree() * q.degree()) % 2) ? -1 : 1;
        CHECK(r1 == sign * r2);
        CHECK(r1 == resultant_sylvester(p, q));
        ++checked;
    }
    CHECK(checked > 250);
}

TEST_CASE("resultant of products multiplies") {
    for (int trial = 0; trial < 50; ++trial) {
        PolyZ a = random_poly(3, 5), b = random_poly(3, 5), c = random_poly(3, 5);
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        CHECK(resultant(a * b, c) == resultant(a, c) * resultant(b, c));
    }
}

TEST_CASE("binary cubic discriminant") {
    CHECK(binary_form_disc(BiPolyQ::binary_form({1, 0, 0, 1})) == -27);  // u^3 + v^3
    // uv(u+v) = u^2 v + u v^2
    BiPolyQ F = BiPolyQ::monomial(2, 1, 1) + BiPolyQ::monomial(1, 2, 1);
    CHECK(binary_form_disc(F) == 1);
    CHECK(binary_form_disc(BiPolyQ::binary_form({3, 30, 30, 2})) == Integer(366228));
    CHECK_THROWS_AS(binary_form_disc(BiPolyQ::binary_form({1, 1})), std::domain_error);
    CHECK_THROWS_AS(binary_form_disc(BiPolyQ::binary_form({1, 0, 0, 1}) +
                                     BiPolyQ::constant(1)),
                    std::domain_error);
}

TEST_CASE("characteristic polynomial: pinned examples") {
    MatQ I2 = MatQ::identity(2);
    PolyQ cp = charpoly_exact(I2);
    CHECK(cp == PolyQ({Rational(1), Rational(-2), Rational(1)}));  // (t-1)^2

    // companion matrix of t^3 - 2
    MatQ C(3, 3);
    C.at(0, 2) = 2;
    C.at(1, 0) = 1;
    C.at(2, 1) = 1;
    CHECK(charpoly_exact(C) == PolyQ({Rational(-2), Rational(0), Rational(0), Rational(1)}));

    MatQ Z(3, 3);
    CHECK(charpoly_exact(Z) == PolyQ({Rational(0), Rational(0), Rational(0), Rational(1)}));
}

TEST_CASE("characteristic polynomial vs fraction-free determinant") {
    std::uniform_int_distribution<int> dc(-9, 9);
    std::uniform_int_distribution<int> dden(1, 4);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + trial % 5;
        MatQ M(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) M.at(i, j) = rat(dc(rng), dden(rng));
        PolyQ cp = charpoly_exact(M);
        // spot-check at random rational lambda: cp(lambda) = det(lambda I - M)
        Rational lambda = rat(dc(rng), dden(rng));
        MatQ A(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) A.at(i, j) = (i == j ? lambda : Rational(0)) - M.at(i, j);
        CHECK(cp.eval(lambda) == A.det_bareiss());
    }
}

TEST_CASE("trial factoring") {
    Integer n = ipow(2, 27) * ipow(3, 28) * ipow(5, 3) * 7;
    FactoredInteger f = trial_factor(n, 100);
    CHECK(f.cofactor == 1);
    CHECK(f.factors.at(2) == 27);
    CHECK(f.factors.at(3) == 28);
    CHECK(f.factors.at(5) == 3);
    CHECK(f.factors.at(7) == 1);
    CHECK(f.str() == "2^27 * 3^28 * 5^3 * 7");
    CHECK(f.value() == n);

    FactoredInteger one = trial_factor(1, 100);
    CHECK(one.factors.empty());
    CHECK(one.cofactor == 1);

    FactoredInteger g = trial_factor(Integer(2 * 101), 100);
    CHECK(g.factors.at(2) == 1);
    CHECK(g.cofactor == 101);
    CHECK_THROWS_AS(trial_factor(0, 100), std::invalid_argument);
}

TEST_CASE("trial factoring re-multiplies on random input") {
    std::uniform_int_distribution<long> dn(2, 1000000000L);
    for (int i = 0; i < 200; ++i) {
        Integer n(dn(rng));
        if (i % 2) n = -n;
        CHECK(trial_factor(n, 1000).value() == n);
    }
}

TEST_CASE("power residues") {
    auto c7 = power_residues(7, 3);
    CHECK(c7 == std::set<Integer>{0, 1, 6});
    auto s3 = power_residues(3, 2);
    CHECK(s3 == std::set<Integer>{0, 1});
    CHECK(power_residues(11, 1).size() == 11);
    // multiplicative closure for prime modulus
    for (long q : {5L, 7L, 11L, 13L}) {
        for (long n : {2L, 3L, 4L}) {
            auto s = power_residues(q, n);
            for (const auto& a : s)
                for (const auto& b : s) CHECK(s.count(mod_pos(a * b, q)) == 1);
        }
    }
}

TEST_CASE("monic factorization") {
    // (t^2 - 2)(t^2 + 1)(t - 3)^2
    PolyZ f = P({-2, 0, 1}) * P({1, 0, 1}) * P({-3, 1}) * P({-3, 1});
    auto fac = factor_monic(f);
    REQUIRE(fac.size() == 3);
    std::vector<long> degs = factor_degrees(f);
    CHECK(degs == std::vector<long>{1, 1, 2, 2});

    // cyclotomic-style: t^4 + t^3 + t^2 + t + 1 irreducible
    CHECK(factor_degrees(P({1, 1, 1, 1, 1})) == std::vector<long>{4});
    // splits fully
    CHECK(factor_degrees(P({-1, 0, 0, 0, 1})) == std::vector<long>{1, 1, 2});  // t^4 - 1
}

TEST_CASE("factorization recombines against random products") {
    std::uniform_int_distribution<int> dc(-4, 4);
    for (int trial = 0; trial < 30; ++trial) {
        // product of two monic quadratics/cubics
        auto rand_monic = [&](int d) {
            std::vector<Integer> c(d + 1);
            for (int i = 0; i < d; ++i) c[i] = dc(rng);
            c[d] = 1;
            return PolyZ(std::move(c));
        };
        PolyZ f = rand_monic(2) * rand_monic(3);
        auto fac = factor_monic(f);
        PolyZ prod = PolyZ::constant(1);
        long degsum = 0;
        for (const auto& pf : fac) {
            for (unsigned long i = 0; i < pf.multiplicity; ++i) prod = prod * pf.factor;
            degsum += pf.factor.degree() * pf.multiplicity;
        }
        CHECK(prod == f);
        CHECK(degsum == 5);
    }
}

TEST_CASE("bipoly algebra") {
    BiPolyQ F = BiPolyQ::binary_form({3, 30, 30, 2});
    long d = 0;
    CHECK(F.is_homogeneous(&d));
    CHECK(d == 3);
    CHECK(F.eval(1, 0) == 3);
    CHECK(F.eval(0, 1) == 2);
    // F(x^2, 1) = 3x^6 + 30x^4 + 30x^2 + 2
    PolyQ sub = F.substitute(PolyQ({Rational(0), Rational(0), Rational(1)}),
                             PolyQ::constant(Rational(1)));
    CHECK(sub == PolyQ({Rational(2), Rational(0), Rational(30), Rational(0), Rational(30),
                        Rational(0), Rational(3)}));
    CHECK((F - F).is_zero());
    CHECK((F.du().dv() == F.dv().du()));
}

TEST_CASE("matrix kernel and solve") {
    MatQ A(3, 3);
    // rank-2 matrix
    A.at(0, 0) = 1; A.at(0, 1) = 2; A.at(0, 2) = 3;
    A.at(1, 0) = 2; A.at(1, 1) = 4; A.at(1, 2) = 6;
    A.at(2, 0) = 0; A.at(2, 1) = 1; A.at(2, 2) = 1;
    CHECK(A.rank() == 2);
    MatQ K = A.kernel();
    CHECK(K.cols() == 1);
    CHECK((A * K).is_zero());
}
