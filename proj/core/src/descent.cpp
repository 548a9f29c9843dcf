#include "trisum/descent.hpp"
#include "trisum/parallel.hpp"
#include "trisum/primes.hpp"
#include <algorithm>
#include <array>
#include <mutex>

namespace trisum {

namespace {

// (u + v sqrt70)^5 = P(u,v) + Q(u,v) sqrt70
void quintic_power_forms(BiPolyQ& P, BiPolyQ& Q) {
    P = BiPolyQ::binary_form({Integer(1), Integer(0), Integer(700), Integer(0), Integer(24500),
                              Integer(0)});
    Q = BiPolyQ::binary_form({Integer(0), Integer(5), Integer(0), Integer(700), Integer(0),
                              Integer(4900)});
}

std::array<uint64_t, 6> form_mod(const BiPolyQ& F, uint64_t q) {
    std::array<uint64_t, 6> c{};
    for (long k = 0; k <= 5; ++k) {
        auto it = F.terms().find({5 - k, k});
        if (it == F.terms().end()) continue;
        c[k] = mod_pos(numer(it->second), Integer(static_cast<unsigned long>(q))).get_ui();
    }
    return c;
}

inline uint64_t eval_form(const std::array<uint64_t, 6>& c, uint64_t u, uint64_t v, uint64_t q) {
    // c0 u^5 + c1 u^4 v + ... + c5 v^5, Horner in v
    uint64_t up[6];
    up[0] = 1 % q;
    for (int i = 1; i <= 5; ++i) up[i] = (up[i - 1] * u) % q;
    uint64_t acc = 0;
    for (int k = 5; k >= 0; --k) acc = (acc * v + c[k] * up[5 - k]) % q;
    return acc;
}

}  // namespace

QuinticSystem build_system(long alpha, long c) {
    if (alpha != 1 && alpha != 2 && alpha != 5 && alpha != 10)
        throw std::invalid_argument("alpha must be 1, 2, 5 or 10");
    if (c < -2 || c > 2) throw std::invalid_argument("c must lie in [-2, 2]");
    long a = (alpha % 2 == 0) ? 1 : 0;
    long b = (alpha % 5 == 0) ? 1 : 0;

    IdealSpec spec;
    spec.e[P2] = a;
    spec.e[P5] = b;
    spec.e[P3] = 1;
    if (!spec.principal()) spec.e[P7] = -5;  // q = P7 case

    QuadElem gen = ideal_generator(spec);
    QuadElem elem = gen * fundamental_unit().pow(c);
    if (elem.d != gen.d) throw std::logic_error("unit multiplication changed the denominator");

    QuinticSystem sys;
    sys.alpha = alpha;
    sys.c = c;
    sys.generator = gen;
    sys.d = elem.d;

    BiPolyQ P, Q;
    quintic_power_forms(P, Q);
    Rational R(elem.r), S(elem.s);
    sys.f = P * R + Q * (S * Rational(70));
    sys.g = P * S + Q * R;
    if (!sys.f.is_integral() || !sys.g.is_integral())
        throw std::logic_error("system coefficients not integral");
    return sys;
}

std::vector<long> default_sieve_moduli() {
    std::vector<long> m = {64, 27, 125, 343};
    for (long p : primes_in_range(11, 100)) m.push_back(p);
    return m;
}

bool local_sieve_system(const QuinticSystem& sys, const std::vector<long>& moduli) {
    for (long qm : moduli) {
        uint64_t q = static_cast<uint64_t>(qm);
        auto fc = form_mod(sys.f, q);
        auto gc = form_mod(sys.g, q);
        uint64_t d = mod_pos(sys.d, Integer(qm)).get_ui();
        // possible right-hand sides d(3 alpha^8 z1^10 + 10)
        std::vector<char> rhs_ok(q, 0);
        {
            Integer a8 = ipow(Integer(sys.alpha), 8);
            uint64_t a8q = mod_pos(a8, Integer(qm)).get_ui();
            for (uint64_t w = 0; w < q; ++w) {
                uint64_t w2 = (w * w) % q;
                uint64_t w10 = 1;
                for (int i = 0; i < 5; ++i) w10 = (w10 * w2) % q;
                uint64_t val = (d * ((3 * a8q % q) * w10 % q + 10)) % q;
                rhs_ok[val] = 1;
            }
        }
        bool soluble = false;
        for (uint64_t u = 0; u < q && !soluble; ++u)
            for (uint64_t v = 0; v < q; ++v) {
                if (eval_form(gc, u, v, q) != d) continue;
                if (rhs_ok[eval_form(fc, u, v, q)]) {
                    soluble = true;
                    break;
                }
            }
        if (!soluble) return false;
    }
    return true;
}

std::vector<std::pair<long, long>> sieve_alpha_c_grid(const std::vector<long>& moduli,
                                                      unsigned jobs) {
    const std::array<long, 4> alphas{1, 2, 5, 10};
    std::vector<std::pair<long, long>> cells;
    for (long a : alphas)
        for (long c = -2; c <= 2; ++c) cells.emplace_back(a, c);
    std::vector<char> ok(cells.size(), 0);
    parallel_for(cells.size(), jobs, [&](size_t i) {
        QuinticSystem sys = build_system(cells[i].first, cells[i].second);
        ok[i] = local_sieve_system(sys, moduli) ? 1 : 0;
    });
    std::vector<std::pair<long, long>> out;
    for (size_t i = 0; i < cells.size(); ++i)
        if (ok[i]) out.push_back(cells[i]);
    return out;
}

std::vector<std::pair<Integer, Integer>> thue_search(const BiPolyQ& g, const Integer& rhs,
                                                     const Integer& bound) {
    long deg = 0;
    if (!g.is_homogeneous(&deg) || deg < 1) throw std::invalid_argument("homogeneous form required");
    if (rhs == 0) throw std::invalid_argument("rhs must be nonzero");
    if (!g.is_integral()) throw std::invalid_argument("integer form required");

    std::vector<Integer> c(deg + 1, Integer(0));  // u^{deg-k} v^k
    for (const auto& [key, coef] : g.terms()) c[key.second] = numer(coef);

    auto eval_exact = [&](const Integer& u, const Integer& v) {
        Integer acc(0);
        std::vector<Integer> up(deg + 1);
        up[0] = 1;
        for (long i = 1; i <= deg; ++i) up[i] = up[i - 1] * u;
        for (long k = deg; k >= 0; --k) acc = acc * v + c[k] * up[deg - k];
        return acc;
    };

    const long m1 = 512, m2 = 243;
    auto build_filter = [&](long m) {
        std::vector<char> ok(m * m, 0);
        std::vector<long> cm(deg + 1);
        for (long k = 0; k <= deg; ++k) cm[k] = to_long(mod_pos(c[k], Integer(m)));
        long r = to_long(mod_pos(rhs, Integer(m)));
        for (long u = 0; u < m; ++u) {
            std::vector<long> up(deg + 1);
            up[0] = 1 % m;
            for (long i = 1; i <= deg; ++i) up[i] = (up[i - 1] * u) % m;
            for (long v = 0; v < m; ++v) {
                long acc = 0;
                for (long k = deg; k >= 0; --k) acc = (acc * v + cm[k] * up[deg - k]) % m;
                if (acc == r) ok[u * m + v] = 1;
            }
        }
        return ok;
    };
    std::vector<char> ok1 = build_filter(m1), ok2 = build_filter(m2);

    // per v-residue list of allowed u-residues mod m1
    std::vector<std::vector<long>> ulist(m1);
    for (long vr = 0; vr < m1; ++vr)
        for (long ur = 0; ur < m1; ++ur)
            if (ok1[ur * m1 + vr]) ulist[vr].push_back(ur);

    std::vector<std::pair<Integer, Integer>> out;
    long B = to_long(bound);
    for (long v = -B; v <= B; ++v) {
        long vr = ((v % m1) + m1) % m1;
        long vr2 = ((v % m2) + m2) % m2;
        for (long ur : ulist[vr]) {
            long u0 = -B + ((ur - (-B % m1) + 2 * m1) % m1);
            for (long u = u0; u <= B; u += m1) {
                long ur2 = ((u % m2) + m2) % m2;
                if (!ok2[ur2 * m2 + vr2]) continue;
                if (eval_exact(Integer(u), Integer(v)) == rhs) out.emplace_back(u, v);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::pair<Integer, Integer>> bounded_integral_points(const WeierstrassModel& E,
                                                                 const Integer& bound) {
    if (is_singular(E)) throw std::domain_error("singular model");
    if (!is_integral(E)) throw std::invalid_argument("integral model required");
    Integer a1 = numer(E.a1), a2 = numer(E.a2), a3 = numer(E.a3), a4 = numer(E.a4),
            a6 = numer(E.a6);
    std::vector<std::pair<Integer, Integer>> out;
    Integer X = -bound;
    Integer D, r, lin, rhs;
    for (; X <= bound; ++X) {
        // (2y + a1 X + a3)^2 = 4(X^3 + a2 X^2 + a4 X + a6) + (a1 X + a3)^2
        lin = a1 * X + a3;
        rhs = ((X + a2) * X + a4) * X + a6;
        D = 4 * rhs + lin * lin;
        if (D < 0) continue;
        if (!is_square(D, &r)) continue;
        for (int sgn = +1; sgn >= -1; sgn -= 2) {
            Integer num = -lin + sgn * r;
            if (mpz_even_p(num.get_mpz_t())) {
                out.emplace_back(X, divexact(num, Integer(2)));
            }
            if (r == 0) break;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

WeierstrassModel small_exp_curve_p2(long alpha) {
    Integer a(alpha);
    return {Rational(0), Rational(20 * a), Rational(0), Rational(30 * a * a), Rational(0)};
}

WeierstrassModel small_exp_curve_p3(long alpha) {
    Integer a(alpha);
    return {Rational(0), Rational(0), Rational(0), Rational(0), Rational(630 * a * a)};
}

std::vector<Integer> points_to_x(const std::vector<std::pair<Integer, Integer>>& pts, long alpha,
                                 long p) {
    if (p != 2 && p != 3) throw std::invalid_argument("p must be 2 or 3");
    std::vector<Integer> out;
    Integer a(alpha);
    for (const auto& [X, Y] : pts) {
        if (p == 2) {
            if (X == 0 && Y == 0) {
                out.push_back(0);  // the degenerate solution x = z = 0
                continue;
            }
            // X = 3 a x^2, Y = 3 a x z2; then x = a z1^2 and 3x^4+20x^2+10 = a z2^2
            Integer t = 3 * a;
            if (!divides(t, X)) continue;
            Integer x2 = divexact(X, t);
            Integer x;
            if (x2 < 0 || !is_square(x2, &x)) continue;
            for (const Integer& xx : {x, Integer(-x)}) {
                if (xx == 0) {
                    out.push_back(0);
                    break;
                }
                if (!divides(t * xx, Y)) continue;
                Integer z2 = divexact(Y, t * xx);
                Integer s = 3 * ipow(xx, 4) + 20 * xx * xx + 10;
                if (s != a * z2 * z2) continue;
                if (!divides(a, xx)) continue;
                Integer z1sq = divexact(xx, a);
                if (!is_square(z1sq)) continue;
                out.push_back(xx);
            }
        } else {
            // X = 3 a z2, Y = 3 a (3x^2 + 10); x = a^2 z1^3, 3x^4+20x^2+10 = a z2^3
            Integer t = 3 * a;
            if (!divides(t, X) || !divides(t, Y)) continue;
            Integer z2 = divexact(X, t);
            Integer w = divexact(Y, t);  // 3x^2 + 10
            Integer num = w - 10;
            if (num < 0 || !divides(Integer(3), num)) continue;
            Integer x2 = divexact(num, Integer(3));
            Integer x;
            if (!is_square(x2, &x)) continue;
            for (const Integer& xx : {x, Integer(-x)}) {
                Integer s = 3 * ipow(xx, 4) + 20 * xx * xx + 10;
                if (s != a * ipow(z2, 3)) continue;
                Integer a2 = a * a;
                if (!divides(a2, xx)) continue;
                Integer z1c = divexact(xx, a2);
                Integer z1;
                if (!nth_root_exact(z1c, 3, z1)) continue;
                out.push_back(xx);
                if (xx == 0) break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace trisum
