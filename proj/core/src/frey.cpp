#include "trisum/frey.hpp"
#include "trisum/primes.hpp"
#include <algorithm>

namespace trisum {

namespace {

PolyQ pq(std::initializer_list<Rational> c) { return PolyQ(c); }

long gcd10(const Integer& x) { return to_long(igcd(x, Integer(10))); }

}  // namespace

WeierstrassModel FreyFamily::at(const Integer& x) const {
    Rational xq(x);
    return {a1.eval(xq), a2.eval(xq), a3.eval(xq), a4.eval(xq), a6.eval(xq)};
}

bool FreyFamily::valid_at(const Integer& x) const {
    if (alpha != 0) {
        if (requires_nonzero_x && x == 0) return false;
        return gcd10(x) == alpha;
    }
    return mpz_odd_p(x.get_mpz_t());  // k = 6 family
}

FamilyInvariants family_invariants(const FreyFamily& F) {
    FamilyInvariants I;
    I.b2 = F.a1 * F.a1 + F.a2 * Rational(4);
    I.b4 = F.a4 * Rational(2) + F.a1 * F.a3;
    I.b6 = F.a3 * F.a3 + F.a6 * Rational(4);
    I.b8 = F.a1 * F.a1 * F.a6 + F.a2 * F.a6 * Rational(4) - F.a1 * F.a3 * F.a4 +
           F.a2 * F.a3 * F.a3 - F.a4 * F.a4;
    I.c4 = I.b2 * I.b2 - I.b4 * Rational(24);
    I.c6 = -(I.b2 * I.b2 * I.b2) + I.b2 * I.b4 * Rational(36) - I.b6 * Rational(216);
    I.disc = -(I.b2 * I.b2 * I.b8) - I.b4 * I.b4 * I.b4 * Rational(8) -
             I.b6 * I.b6 * Rational(27) + I.b2 * I.b4 * I.b6 * Rational(9);
    return I;
}

SplitData alpha_split(const Integer& x, const Integer& z, const Integer& p) {
    if (!is_prime(p)) throw std::invalid_argument("exponent must be a prime");
    Integer s = 3 * ipow(x, 4) + 20 * x * x + 10;
    if (x * s != ipow(z, to_long(p))) throw std::invalid_argument("not a solution");
    long alpha = gcd10(x);
    SplitData d;
    d.alpha = alpha;
    unsigned long pe = static_cast<unsigned long>(to_long(p));
    Integer den = ipow(Integer(alpha), pe - 1);
    if (!divides(den, x)) throw std::invalid_argument("split failure");
    Integer x1 = divexact(x, den);
    if (!nth_root_exact(x1, pe, d.z1)) throw std::invalid_argument("split failure");
    if (!divides(Integer(alpha), s)) throw std::invalid_argument("split failure");
    Integer s1 = divexact(s, Integer(alpha));
    if (!nth_root_exact(s1, pe, d.z2)) throw std::invalid_argument("split failure");
    return d;
}

FreyFamily frey_k5_E_family(long alpha) {
    // s(x) = 3x^4 + 20x^2 + 10
    PolyQ s = pq({Rational(10), Rational(0), Rational(20), Rational(0), Rational(3)});
    PolyQ x2p1 = pq({Rational(1), Rational(0), Rational(1)});
    FreyFamily F;
    F.alpha = alpha;
    switch (alpha) {
        case 1:
            F.name = "E_x_1";
            F.a2 = x2p1 * Rational(20);
            F.a4 = s * Rational(10);
            F.validity = "gcd(x,10) = 1, x != 0";
            break;
        case 5:
            F.name = "E_x_5";
            F.a2 = x2p1 * Rational(4);
            F.a4 = s * rat(2, 5);
            F.validity = "gcd(x,10) = 5, x != 0";
            break;
        case 2:
            F.name = "E_x_2";
            F.a1 = pq({Rational(1)});
            F.a2 = pq({Rational(1), Rational(0), rat(5, 4)});
            F.a4 = pq({Rational(0), Rational(0), Rational(0), Rational(0), rat(35, 128)});
            F.validity = "gcd(x,10) = 2, x != 0";
            break;
        case 10:
            F.name = "E_x_10";
            F.a1 = pq({Rational(1)});
            F.a2 = pq({Rational(0), Rational(0), rat(1, 4)});
            F.a4 = pq({Rational(0), Rational(0), Rational(0), Rational(0), rat(7, 640)});
            F.validity = "gcd(x,10) = 10, x != 0";
            break;
        default:
            throw std::invalid_argument("alpha must be 1, 2, 5 or 10");
    }
    return F;
}

FreyFamily frey_k5_F_family(long alpha) {
    if (alpha != 1 && alpha != 2 && alpha != 5 && alpha != 10)
        throw std::invalid_argument("alpha must be 1, 2, 5 or 10");
    FreyFamily F;
    F.name = "F_x_" + std::to_string(alpha);
    F.alpha = alpha;
    F.requires_nonzero_x = false;  // nonsingular even at x = 0
    // Y^2 = X^3 + 2(3x^2+10) X^2 + 70 X, independent of alpha
    F.a2 = pq({Rational(20), Rational(0), Rational(6)});
    F.a4 = pq({Rational(70)});
    F.validity = "gcd(x,10) = " + std::to_string(alpha);
    return F;
}

FreyFamily frey_k6_family() {
    FreyFamily F;
    F.name = "E_x_k6";
    F.alpha = 0;
    F.a3 = pq({Rational(1)});
    F.a4 = pq({rat(-1080, 2), Rational(0), rat(-1269, 2), Rational(0), rat(-945, 2)});
    F.a6 = pq({rat(19061, 4), Rational(0), rat(26730, 4), Rational(0), rat(-18630, 4),
               Rational(0), rat(-15093, 4)});
    F.validity = "x odd";
    return F;
}

WeierstrassModel frey_k5_E(const Integer& x, long alpha) {
    if (x == 0) throw std::invalid_argument("singular family member");
    if (gcd10(x) != alpha) throw std::invalid_argument("alpha must equal gcd(x,10)");
    return frey_k5_E_family(alpha).at(x);
}

WeierstrassModel frey_k5_F(const Integer& x, long alpha) {
    if (gcd10(x) != alpha) throw std::invalid_argument("alpha must equal gcd(x,10)");
    return frey_k5_F_family(alpha).at(x);
}

WeierstrassModel frey_k6(const Integer& x) {
    if (mpz_even_p(x.get_mpz_t())) throw std::invalid_argument("non-integral model");
    return frey_k6_family().at(x);
}

BiPolyQ k6_cubic() {
    return BiPolyQ::binary_form({Integer(3), Integer(30), Integer(30), Integer(2)});
}

PolyZ k6_sextic() {
    return PolyZ({Integer(2), Integer(0), Integer(30), Integer(0), Integer(30), Integer(0),
                  Integer(3)});
}

CubicRecipe bd_recipe(const BiPolyQ& F) {
    long deg = 0;
    if (!F.is_homogeneous(&deg) || deg != 3)
        throw std::domain_error("binary form must be a homogeneous cubic");
    if (!F.is_integral()) throw std::domain_error("cubic must have integer coefficients");
    CubicRecipe R;
    R.F = F;
    BiPolyQ Fu = F.du(), Fv = F.dv();
    BiPolyQ Fuu = Fu.du(), Fuv = Fu.dv(), Fvv = Fv.dv();
    R.H = (Fuu * Fvv - Fuv * Fuv) * rat(-1, 4);
    BiPolyQ Hu = R.H.du(), Hv = R.H.dv();
    R.G = Fu * Hv - Fv * Hu;
    R.disc_F = binary_form_disc(F);
    // disc(Y^2 = X^3 - 3H X + G) = -16(4(-3H)^3 + 27 G^2) = 432(4H^3 - G^2)
    BiPolyQ lhs = (R.H * R.H * R.H * Rational(4) - R.G * R.G) * Rational(432);
    BiPolyQ rhs = F * F * Rational(Integer(11664) * R.disc_F);  // 2^4 3^6 = 11664
    if (!(lhs == rhs)) throw std::logic_error("cubic recipe discriminant identity failed");
    return R;
}

Check3391 check_3391_multiplicative() {
    Check3391 out;
    const Integer m(3391);
    FreyFamily F = frey_k6_family();
    FamilyInvariants I = family_invariants(F);
    PolyZ c4num;
    Integer c4den;
    I.c4.clear_denominators(c4num, c4den);
    PolyZ sext = k6_sextic();
    out.roots_are_sextic_roots = true;
    out.no_lift = true;
    for (Integer x = 0; x < m; ++x) {
        if (c4num.eval_mod(x, m) != 0) continue;
        out.c4_roots.push_back(x);
        if (sext.eval_mod(x, m) != 0) out.roots_are_sextic_roots = false;
        // Hensel lift to 3391^2: any y = x + 3391k with sextic(y) = 0 mod 3391^2
        bool lifts = false;
        Integer m2 = m * m;
        for (Integer k = 0; k < m; ++k) {
            if (sext.eval_mod(x + m * k, m2) == 0) {
                lifts = true;
                break;
            }
        }
        if (lifts) out.no_lift = false;
    }
    std::sort(out.c4_roots.begin(), out.c4_roots.end());
    return out;
}

}  // namespace trisum
