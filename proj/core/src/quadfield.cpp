#include "trisum/quadfield.hpp"
#include <sstream>

namespace trisum {

namespace {
const long D = 70;
}

QuadElem::QuadElem(Integer r_, Integer s_, Integer d_) : r(std::move(r_)), s(std::move(s_)), d(std::move(d_)) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    if (d < 0) {
        r = -r;
        s = -s;
        d = -d;
    }
    Integer g = igcd(igcd(r, s), d);
    if (g > 1) {
        r = divexact(r, g);
        s = divexact(s, g);
        d = divexact(d, g);
    }
}

QuadElem QuadElem::operator*(const QuadElem& o) const {
    return QuadElem(r * o.r + D * s * o.s, r * o.s + s * o.r, d * o.d);
}

QuadElem QuadElem::pow(long e) const {
    if (e < 0) {
        // only valid for units: x^{-1} = conj(x)/norm(x)
        Rational n = norm();
        if (n != 1 && n != -1) throw std::domain_error("negative power of a non-unit");
        QuadElem inv = conj();
        if (n == -1) inv = -inv;
        return inv.pow(-e);
    }
    QuadElem acc(1, 0);
    QuadElem b = *this;
    while (e) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

Rational QuadElem::norm() const { return rat(r * r - D * s * s, d * d); }

std::string QuadElem::str() const {
    std::ostringstream os;
    if (d != 1) os << "(";
    os << r.get_str();
    if (s >= 0) os << " + " << s.get_str();
    else os << " - " << iabs(s).get_str();
    os << " sqrt(70)";
    if (d != 1) os << ")/" << d.get_str();
    return os.str();
}

std::pair<Integer, Integer> pell_fundamental(const Integer& n) {
    // continued fraction of sqrt(n); convergents until h^2 - n k^2 = +-1
    Integer a0 = isqrt(n);
    if (a0 * a0 == n) throw std::invalid_argument("n is a perfect square");
    Integer m(0), d(1), a(a0);
    Integer h_prev(1), h(a0), k_prev(0), k(1);
    for (;;) {
        if (h * h - n * k * k == 1 || h * h - n * k * k == -1) return {h, k};
        m = d * a - m;
        d = divexact(n - m * m, d);
        a = (a0 + m) / d;
        Integer h2 = a * h + h_prev, k2 = a * k + k_prev;
        h_prev = h;
        k_prev = k;
        h = h2;
        k = k2;
    }
}

QuadElem fundamental_unit() {
    auto [x, y] = pell_fundamental(Integer(D));
    QuadElem u(x, y);
    Rational n = u.norm();
    if (n != 1 && n != -1) throw std::logic_error("fundamental unit: norm check failed");
    return u;
}

Rational IdealSpec::norm() const {
    Rational n(1);
    auto mul = [&](long p, long ee) {
        if (ee >= 0)
            n *= Rational(ipow(Integer(p), ee));
        else
            n /= Rational(ipow(Integer(p), -ee));
    };
    mul(2, e[P2]);
    mul(3, e[P3] + e[P3c]);
    mul(5, e[P5]);
    mul(7, e[P7]);
    return n;
}

Integer IdealSpec::min_denominator() const {
    // ramified primes contribute ceil(-e/2), the split pair max(0,-e3,-e3')
    auto up = [](long v) { return v <= 0 ? 0 : v; };
    long d2 = up(-e[P2]), d5 = up(-e[P5]), d7 = up(-e[P7]);
    Integer d = ipow(Integer(2), (d2 + 1) / 2) * ipow(Integer(5), (d5 + 1) / 2) *
                ipow(Integer(7), (d7 + 1) / 2);
    long d3 = std::max(0L, std::max(-e[P3], -e[P3c]));
    d *= ipow(Integer(3), d3);
    return d;
}

long quad_valuation(const QuadElem& x, QuadPrime P) {
    if (x.r == 0 && x.s == 0) throw std::invalid_argument("valuation of zero");
    if (!x.is_integral()) throw std::invalid_argument("integral element required");
    Rational nq = x.norm();
    Integer n = numer(nq);
    switch (P) {
        case P2: return n == 0 ? 0 : valuation(n, Integer(2));
        case P5: return n == 0 ? 0 : valuation(n, Integer(5));
        case P7: return n == 0 ? 0 : valuation(n, Integer(7));
        case P3:
        case P3c: {
            // divide out the conjugate-split prime: mod P3, sqrt70 = -1; mod P3', sqrt70 = +1
            QuadElem y = x;
            long v = 0;
            for (;;) {
                Integer residue = (P == P3) ? Integer(y.r - y.s) : Integer(y.r + y.s);
                if (mod_pos(residue, Integer(3)) != 0) return v;
                // multiply by the other prime's generator pair and divide by 3
                QuadElem m = (P == P3) ? QuadElem(1, -1) : QuadElem(1, 1);
                QuadElem z = y * m;
                y = QuadElem(divexact(z.r, Integer(3)), divexact(z.s, Integer(3)));
                ++v;
            }
        }
    }
    throw std::logic_error("unreachable");
}

QuadElem ideal_generator(const IdealSpec& spec, const Integer& s_bound) {
    if (!spec.principal()) throw std::invalid_argument("ideal class is nontrivial");
    Integer d = spec.min_denominator();
    // integral ideal J = d * I; exponents of J
    IdealSpec J = spec;
    J.e[P2] += 2 * (d == 0 ? 0 : valuation(d, Integer(2)));
    J.e[P5] += 2 * valuation(d, Integer(5));
    J.e[P7] += 2 * valuation(d, Integer(7));
    long v3 = valuation(d, Integer(3));
    J.e[P3] += v3;
    J.e[P3c] += v3;
    Rational nq = J.norm();
    if (denom(nq) != 1) throw std::logic_error("denominator did not clear");
    Integer T = numer(nq);

    auto check = [&](const QuadElem& cand) {
        for (int P = 0; P < 5; ++P)
            if (quad_valuation(cand, static_cast<QuadPrime>(P)) != J.e[P]) return false;
        return true;
    };

    for (Integer s = 0; s <= s_bound; ++s) {
        for (int sign = +1; sign >= -1; sign -= 2) {
            Integer rr = 70 * s * s + sign * T;
            if (rr < 0) continue;
            Integer r;
            if (!is_square(rr, &r)) continue;
            for (const Integer& rc : {Integer(r), Integer(-r)}) {
                QuadElem cand(rc, s);
                if (iabs(numer(cand.norm())) != T) continue;
                if (check(cand)) return QuadElem(rc, s, d);
                if (rc == 0) break;
            }
            if (T == 0) break;
        }
    }
    throw std::runtime_error("generator not found within bound");
}

}  // namespace trisum
