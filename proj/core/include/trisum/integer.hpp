#ifndef TRISUM_INTEGER_HPP
#define TRISUM_INTEGER_HPP

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace trisum {

// Exact arbitrary-precision arithmetic. All quantities in the library are
// Integer or Rational; there is no floating point on any result path.
using Integer = mpz_class;
using Rational = mpq_class;

inline Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Integer iabs(const Integer& a) { return a >= 0 ? a : Integer(-a); }

// floor(sqrt(n)); n must be >= 0
inline Integer isqrt(const Integer& n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_square(const Integer& n, Integer* root = nullptr) {
    if (n < 0) return false;
    if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
    if (root) *root = isqrt(n);
    return true;
}

// exact k-th root: true iff n = r^k with integer r (n may be negative for odd k)
inline bool nth_root_exact(const Integer& n, unsigned long k, Integer& root) {
    if (k == 0) throw std::invalid_argument("0th root");
    if (n < 0 && k % 2 == 0) return false;
    Integer r;
    int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    if (!exact) return false;
    root = r;
    return true;
}

// multiplicity of p in n; n != 0, p >= 2
inline long valuation(Integer n, const Integer& p) {
    if (n == 0) throw std::invalid_argument("valuation of zero");
    long v = 0;
    Integer q, r;
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        if (r != 0) return v;
        n = q;
        ++v;
    }
}

inline bool divides(const Integer& d, const Integer& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

// exact quotient; throws if d does not divide n
inline Integer divexact(const Integer& n, const Integer& d) {
    if (d == 0) throw std::invalid_argument("division by zero");
    if (!divides(d, n)) throw std::invalid_argument("inexact integer division");
    Integer q;
    mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

inline Integer igcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer ilcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// representative of a mod m in [0, m)
inline Integer mod_pos(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// symmetric representative in (-m/2, m/2]
inline Integer mod_sym(const Integer& a, const Integer& m) {
    Integer r = mod_pos(a, m);
    if (2 * r > m) r -= m;
    return r;
}

// inverse of a mod m; throws if gcd(a, m) != 1
inline Integer mod_inverse(const Integer& a, const Integer& m) {
    Integer r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw std::invalid_argument("not invertible");
    return r;
}

inline Integer powmod(const Integer& b, const Integer& e, const Integer& m) {
    Integer r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline long to_long(const Integer& a) {
    if (!a.fits_slong_p()) throw std::overflow_error("Integer does not fit long");
    return a.get_si();
}

inline Rational rat(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline const Integer& numer(const Rational& q) { return q.get_num(); }
inline const Integer& denom(const Rational& q) { return q.get_den(); }

// v_p of a nonzero rational
inline long valuation(const Rational& q, const Integer& p) {
    if (q == 0) throw std::invalid_argument("valuation of zero");
    long v = 0;
    if (numer(q) != 0) v += valuation(numer(q), p);
    v -= valuation(denom(q), p);
    return v;
}

inline bool is_integer(const Rational& q) { return denom(q) == 1; }

}  // namespace trisum

#endif
