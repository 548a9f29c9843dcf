#include "trisum/tate.hpp"
#include "trisum/factored.hpp"
#include "trisum/primes.hpp"
#include <array>

namespace trisum {

namespace {

struct IntModel {
    Integer a1, a2, a3, a4, a6;
};

IntModel to_int(const WeierstrassModel& E) {
    if (!is_integral(E)) throw std::invalid_argument("non-integral coefficients");
    return {numer(E.a1), numer(E.a2), numer(E.a3), numer(E.a4), numer(E.a6)};
}

WeierstrassModel to_model(const IntModel& M) {
    return {Rational(M.a1), Rational(M.a2), Rational(M.a3), Rational(M.a4), Rational(M.a6)};
}

struct IntInvariants {
    Integer b2, b4, b6, b8, c4, c6, disc;
};

IntInvariants int_invariants(const IntModel& M) {
    IntInvariants I;
    I.b2 = M.a1 * M.a1 + 4 * M.a2;
    I.b4 = 2 * M.a4 + M.a1 * M.a3;
    I.b6 = M.a3 * M.a3 + 4 * M.a6;
    I.b8 = M.a1 * M.a1 * M.a6 + 4 * M.a2 * M.a6 - M.a1 * M.a3 * M.a4 + M.a2 * M.a3 * M.a3 -
           M.a4 * M.a4;
    I.c4 = I.b2 * I.b2 - 24 * I.b4;
    I.c6 = -I.b2 * I.b2 * I.b2 + 36 * I.b2 * I.b4 - 216 * I.b6;
    I.disc = -I.b2 * I.b2 * I.b8 - 8 * I.b4 * I.b4 * I.b4 - 27 * I.b6 * I.b6 +
             9 * I.b2 * I.b4 * I.b6;
    return I;
}

// [1, r, s, t] with integer data stays integral
IntModel shift(const IntModel& M, const Integer& r, const Integer& s, const Integer& t) {
    IntModel F;
    F.a1 = M.a1 + 2 * s;
    F.a2 = M.a2 - s * M.a1 + 3 * r - s * s;
    F.a3 = M.a3 + r * M.a1 + 2 * t;
    F.a4 = M.a4 - s * M.a3 + 2 * r * M.a2 - (t + r * s) * M.a1 + 3 * r * r - 2 * s * t;
    F.a6 = M.a6 + r * M.a4 + r * r * M.a2 + r * r * r - t * M.a3 - t * t - r * t * M.a1;
    return F;
}

long vp(const Integer& n, const Integer& p) {
    if (n == 0) return 1 << 20;  // effectively infinite
    return valuation(n, p);
}

// roots of a monic cubic over F_p with multiplicities (p within counting range)
void cubic_roots(const Integer& A2, const Integer& A4, const Integer& A6, const Integer& p,
                 std::vector<std::pair<Integer, int>>& out) {
    out.clear();
    // synthetic division per root candidate
    std::vector<Integer> c = {mod_pos(A6, p), mod_pos(A4, p), mod_pos(A2, p), Integer(1)};
    for (Integer b = 0; b < p; ++b) {
        // multiplicity of b in the (possibly reduced) cubic
        std::vector<Integer> cur = c;
        int mult = 0;
        for (;;) {
            // evaluate and divide by (T - b) while root
            Integer val(0);
            for (size_t i = cur.size(); i-- > 0;) val = mod_pos(val * b + cur[i], p);
            if (val != 0 || cur.size() <= 1) break;
            std::vector<Integer> q(cur.size() - 1);
            Integer carry(0);
            for (size_t i = cur.size() - 1; i >= 1; --i) {
                carry = mod_pos(carry * b + cur[i], p);
                q[i - 1] = carry;
            }
            cur = q;
            ++mult;
        }
        if (mult > 0) out.emplace_back(b, mult);
    }
}

bool is_qr(const Integer& a, const Integer& p) {
    // p odd prime, a not divisible by p
    return powmod(mod_pos(a, p), (p - 1) / 2, p) == 1;
}

}  // namespace

std::string kodaira_str(Kodaira k, long n) {
    switch (k) {
        case Kodaira::I0: return "I0";
        case Kodaira::In: return "I" + std::to_string(n);
        case Kodaira::II: return "II";
        case Kodaira::III: return "III";
        case Kodaira::IV: return "IV";
        case Kodaira::I0Star: return "I0*";
        case Kodaira::InStar: return "I" + std::to_string(n) + "*";
        case Kodaira::IVStar: return "IV*";
        case Kodaira::IIIStar: return "III*";
        case Kodaira::IIStar: return "II*";
    }
    return "?";
}

ReductionData tate_reduction(const WeierstrassModel& E, const Integer& p) {
    if (!is_prime(p)) throw std::invalid_argument("p not prime");
    IntModel M = to_int(E);
    ReductionData R;
    R.p = p;

    for (;;) {  // restarts on non-minimal models
        IntInvariants I = int_invariants(M);
        if (I.disc == 0) throw std::domain_error("singular model");
        long n = vp(I.disc, p);
        R.v_disc = n;
        if (n == 0) {
            R.type = Kodaira::I0;
            R.f = 0;
            R.components = 1;
            return R;
        }

        // move the singular point to (0,0) mod p
        if (p <= 3) {
            bool found = false;
            for (Integer r = 0; r < p && !found; ++r)
                for (Integer t = 0; t < p && !found; ++t) {
                    IntModel S = shift(M, r, 0, t);
                    if (vp(S.a3, p) >= 1 && vp(S.a4, p) >= 1 && vp(S.a6, p) >= 1) {
                        M = S;
                        found = true;
                    }
                }
            if (!found) throw std::logic_error("tate: singular point not found");
        } else {
            Integer r, t;
            if (vp(I.c4, p) >= 1) {
                r = mod_pos(-I.b2 * mod_inverse(Integer(12), p), p);
            } else {
                r = mod_pos(-(I.c6 + I.b2 * I.c4) * mod_inverse(12 * I.c4, p), p);
            }
            t = mod_pos(-(M.a1 * r + M.a3) * mod_inverse(Integer(2), p), p);
            M = shift(M, r, 0, t);
            if (!(vp(M.a3, p) >= 1 && vp(M.a4, p) >= 1 && vp(M.a6, p) >= 1))
                throw std::logic_error("tate: singular point shift failed");
        }
        I = int_invariants(M);

        if (vp(I.b2, p) == 0) {
            // multiplicative: tangent directions from T^2 + a1 T - a2
            R.type = Kodaira::In;
            R.n = n;
            R.f = 1;
            R.components = n;
            if (p == 2) {
                R.split = (mod_pos(M.a2, p) == 0);
            } else {
                R.split = is_qr(I.b2, p);
            }
            return R;
        }
        if (vp(M.a6, p) < 2) {
            R.type = Kodaira::II;
            R.f = n;
            R.components = 1;
            return R;
        }
        if (vp(I.b8, p) < 3) {
            R.type = Kodaira::III;
            R.f = n - 1;
            R.components = 2;
            return R;
        }
        if (vp(I.b6, p) < 3) {
            R.type = Kodaira::IV;
            R.f = n - 2;
            R.components = 3;
            return R;
        }

        // normalize to p|a1,a2, p^2|a3,a4, p^3|a6
        if (p <= 3) {
            bool found = false;
            Integer p2 = p * p, p3 = p2 * p;
            for (Integer s = 0; s < p && !found; ++s)
                for (Integer r1 = 0; r1 < p2 && !found; ++r1)
                    for (Integer t = 0; t < p3 && !found; ++t) {
                        IntModel S = shift(M, p * r1, s, t);
                        if (vp(S.a1, p) >= 1 && vp(S.a2, p) >= 1 && vp(S.a3, p) >= 2 &&
                            vp(S.a4, p) >= 2 && vp(S.a6, p) >= 3) {
                            M = S;
                            found = true;
                        }
                    }
            if (!found) throw std::logic_error("tate: step-6 normalization failed");
        } else {
            Integer inv2 = mod_inverse(Integer(2), p);
            Integer s = mod_pos(-M.a1 * inv2, p);
            M = shift(M, 0, s, 0);
            Integer p2 = p * p;
            Integer t = mod_pos(-M.a3 * mod_inverse(Integer(2), p2), p2);
            M = shift(M, 0, 0, t);
            if (!(vp(M.a1, p) >= 1 && vp(M.a2, p) >= 1 && vp(M.a3, p) >= 2 && vp(M.a4, p) >= 2 &&
                  vp(M.a6, p) >= 3))
                throw std::logic_error("tate: step-6 normalization failed");
        }

        // cubic T^3 + (a2/p) T^2 + (a4/p^2) T + (a6/p^3) over F_p
        Integer A2 = divexact(M.a2, p), A4 = divexact(M.a4, p * p), A6 = divexact(M.a6, p * p * p);
        std::vector<std::pair<Integer, int>> roots;
        cubic_roots(A2, A4, A6, p, roots);
        int maxmult = 0;
        Integer multroot(0);
        for (auto& [b, m] : roots)
            if (m > maxmult) {
                maxmult = m;
                multroot = b;
            }

        if (maxmult <= 1) {
            R.type = Kodaira::I0Star;
            R.n = 0;
            R.f = n - 4;
            R.components = 5;
            return R;
        }

        if (maxmult == 2) {
            // I_m* subprocedure; put the double root at the origin
            M = shift(M, p * multroot, 0, 0);
            long idx = 1;
            Integer mx = p * p, my = p * p;
            for (;;) {
                Integer a3t = divexact(M.a3, my);
                Integer a6t = divexact(M.a6, mx * my);
                bool ydouble;
                Integer y0;
                if (p == 2) {
                    ydouble = (mod_pos(a3t, p) == 0);
                    y0 = mod_pos(a6t, p);
                } else {
                    ydouble = (vp(a3t * a3t + 4 * a6t, p) >= 1);
                    y0 = mod_pos(-a3t * mod_inverse(Integer(2), p), p);
                }
                if (!ydouble) break;
                M = shift(M, 0, 0, my * y0);
                my *= p;
                ++idx;

                Integer a2t = divexact(M.a2, p);
                Integer a4t = divexact(M.a4, p * mx);
                Integer a6u = divexact(M.a6, mx * my);
                bool xdouble;
                Integer x0;
                if (p == 2) {
                    xdouble = (mod_pos(a4t, p) == 0);
                    x0 = mod_pos(a6u * a2t, p);  // a2t is a unit; inverse = itself mod 2
                } else {
                    xdouble = (vp(a4t * a4t - 4 * a2t * a6u, p) >= 1);
                    x0 = mod_pos(-a4t * mod_inverse(2 * a2t, p), p);
                }
                if (!xdouble) break;
                M = shift(M, mx * x0, 0, 0);
                mx *= p;
                ++idx;
            }
            R.type = Kodaira::InStar;
            R.n = idx;
            R.f = n - 4 - idx;
            R.components = 5 + idx;
            return R;
        }

        // triple root: move it to the origin
        M = shift(M, p * multroot, 0, 0);
        // quadratic Y^2 + (a3/p^2) Y - (a6/p^4) over F_p
        {
            Integer p2 = p * p;
            Integer a3t = divexact(M.a3, p2);
            Integer a6t = divexact(M.a6, p2 * p2);
            bool ydouble;
            Integer y0;
            if (p == 2) {
                ydouble = (mod_pos(a3t, p) == 0);
                y0 = mod_pos(a6t, p);
            } else {
                ydouble = (vp(a3t * a3t + 4 * a6t, p) >= 1);
                y0 = mod_pos(-a3t * mod_inverse(Integer(2), p), p);
            }
            if (!ydouble) {
                R.type = Kodaira::IVStar;
                R.f = n - 6;
                R.components = 7;
                return R;
            }
            M = shift(M, 0, 0, p2 * y0);
        }
        if (vp(M.a4, p) < 4) {
            R.type = Kodaira::IIIStar;
            R.f = n - 7;
            R.components = 8;
            return R;
        }
        if (vp(M.a6, p) < 6) {
            R.type = Kodaira::IIStar;
            R.f = n - 8;
            R.components = 9;
            return R;
        }
        // non-minimal: rescale by u = p and run again
        M = IntModel{divexact(M.a1, p), divexact(M.a2, p * p), divexact(M.a3, p * p * p),
                     divexact(M.a4, ipow(p, 4)), divexact(M.a6, ipow(p, 6))};
    }
}

namespace {

bool kraus_at_2(const Integer& c4, const Integer& c6) {
    if (mod_pos(c6, Integer(4)) == 3) return true;  // c6 = -1 mod 4
    if ((c4 == 0 || valuation(c4, Integer(2)) >= 4)) {
        Integer r = mod_pos(c6, Integer(32));
        return r == 0 || r == 8;
    }
    return false;
}

bool kraus_at_3(const Integer& c6) {
    if (c6 == 0) return true;
    return valuation(c6, Integer(3)) != 2;
}

// reconstruct an integral model with invariants (c4, c6); throws on failure
bool model_from_c4c6(const Integer& c4, const Integer& c6, IntModel& out) {
    for (long b = -24; b <= 24; ++b) {
        Integer b2(b);
        Integer num4 = b2 * b2 - c4;
        if (!divides(Integer(24), num4)) continue;
        Integer b4 = divexact(num4, Integer(24));
        Integer num6 = -b2 * b2 * b2 + 36 * b2 * b4 - c6;
        if (!divides(Integer(216), num6)) continue;
        Integer b6 = divexact(num6, Integer(216));
        Integer a1 = mod_pos(b2, Integer(2));
        Integer a3 = mod_pos(b6, Integer(2));
        Integer n2 = b2 - a1 * a1;
        if (!divides(Integer(4), n2)) continue;
        Integer a2 = divexact(n2, Integer(4));
        Integer n4 = b4 - a1 * a3;
        if (!divides(Integer(2), n4)) continue;
        Integer a4 = divexact(n4, Integer(2));
        Integer n6 = b6 - a3 * a3;
        if (!divides(Integer(4), n6)) continue;
        Integer a6 = divexact(n6, Integer(4));
        out = IntModel{a1, a2, a3, a4, a6};
        IntInvariants I = int_invariants(out);
        if (I.c4 == c4 && I.c6 == c6) return true;
    }
    return false;
}

}  // namespace

WeierstrassModel minimal_model(const WeierstrassModel& E) {
    WeierstrassModel Ei = integral_model(E);
    IntModel M = to_int(Ei);
    IntInvariants I = int_invariants(M);
    if (I.disc == 0) throw std::domain_error("singular model");

    // candidate primes p with p^12 | disc satisfy p <= |disc|^(1/12)
    Integer bound;
    mpz_root(bound.get_mpz_t(), iabs(I.disc).get_mpz_t(), 12);
    Integer u(1);
    for (Integer p = 2; p <= bound; p = next_prime(p)) {
        long e12 = valuation(I.disc, p) / 12;
        long e = e12;
        if (I.c4 != 0) e = std::min(e, valuation(I.c4, p) / 4);
        if (I.c6 != 0) e = std::min(e, valuation(I.c6, p) / 6);
        if (e <= 0) continue;
        if (p == 2 || p == 3) {
            while (e > 0) {
                Integer c4p = divexact(I.c4, ipow(p, 4 * e));
                Integer c6p = divexact(I.c6, ipow(p, 6 * e));
                bool ok = (p == 2) ? kraus_at_2(c4p, c6p) : kraus_at_3(c6p);
                if (ok) break;
                --e;
            }
        }
        u *= ipow(p, e);
    }
    Integer c4m = divexact(I.c4, ipow(u, 4));
    Integer c6m = divexact(I.c6, ipow(u, 6));
    IntModel out;
    if (!model_from_c4c6(c4m, c6m, out))
        throw std::logic_error("minimal model reconstruction failed");
    return to_model(out);
}

Integer conductor(const WeierstrassModel& E) {
    WeierstrassModel M = minimal_model(E);
    Integer disc = numer(invariants(M).disc);
    Integer N(1);
    for (const auto& [p, e] : factor_full(disc)) {
        ReductionData R = tate_reduction(M, p);
        N *= ipow(p, R.f);
    }
    return N;
}

}  // namespace trisum
