#include "trisum/factored.hpp"
#include "trisum/primes.hpp"
#include <sstream>

namespace trisum {

Integer FactoredInteger::value() const {
    if (zero) return 0;
    Integer v = cofactor;
    for (const auto& [p, e] : factors) v *= ipow(p, e);
    return sign < 0 ? Integer(-v) : v;
}

std::set<Integer> FactoredInteger::prime_support() const {
    std::set<Integer> s;
    if (zero) return s;
    for (const auto& [p, e] : factors) s.insert(p);
    if (cofactor != 1) {
        for (const auto& [p, e] : factor_full(cofactor)) s.insert(p);
    }
    return s;
}

std::string FactoredInteger::str() const {
    if (zero) return "0";
    std::ostringstream os;
    if (sign < 0) os << "-";
    bool first = true;
    for (const auto& [p, e] : factors) {
        if (!first) os << " * ";
        first = false;
        os << p.get_str();
        if (e > 1) os << "^" << e;
    }
    if (cofactor != 1) {
        if (!first) os << " * ";
        first = false;
        os << cofactor.get_str();
    }
    if (first) os << "1";
    return os.str();
}

FactoredInteger trial_factor(const Integer& n, const Integer& bound) {
    if (n == 0) throw std::invalid_argument("trial_factor of zero");
    if (bound < 2) throw std::invalid_argument("bound must be >= 2");
    FactoredInteger f;
    Integer m = n;
    if (m < 0) {
        f.sign = -1;
        m = -m;
    }
    for (Integer p = 2; p <= bound && m > 1; p = next_prime(p)) {
        if (p * p > m) {
            // remaining m is prime; record it if within bound
            if (m <= bound) {
                f.factors[m] += 1;
                m = 1;
            }
            break;
        }
        while (divides(p, m)) {
            f.factors[p] += 1;
            m = divexact(m, p);
        }
    }
    f.cofactor = m;
    return f;
}

namespace {

Integer pollard_rho(const Integer& n) {
    // Brent variant; n odd composite, not a perfect power of a found factor
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(12345);
    for (;;) {
        Integer y = rng.get_z_range(n - 3) + 2;
        Integer c = rng.get_z_range(n - 2) + 1;
        Integer x = y, d = 1;
        auto step = [&](Integer& v) { v = mod_pos(v * v + c, n); };
        while (d == 1) {
            step(x);
            step(y);
            step(y);
            d = igcd(iabs(x - y), n);
        }
        if (d != n) return d;
    }
}

void factor_rec(const Integer& n, std::map<Integer, unsigned long>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    // perfect power shortcut
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); ++k) {
            Integer r;
            if (nth_root_exact(n, k, r)) {
                std::map<Integer, unsigned long> sub;
                factor_rec(r, sub);
                for (const auto& [p, e] : sub) out[p] += e * k;
                return;
            }
        }
    }
    Integer d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(divexact(n, d), out);
}

}  // namespace

std::map<Integer, unsigned long> factor_full(const Integer& n) {
    if (n == 0) throw std::invalid_argument("factor of zero");
    std::map<Integer, unsigned long> out;
    Integer m = iabs(n);
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        while (divides(Integer(p), m)) {
            out[Integer(p)] += 1;
            m = divexact(m, Integer(p));
        }
    }
    factor_rec(m, out);
    return out;
}

std::set<Integer> power_residues(const Integer& q, const Integer& n) {
    if (q < 2) throw std::invalid_argument("modulus must be >= 2");
    if (n < 1) throw std::invalid_argument("exponent must be >= 1");
    std::set<Integer> s;
    for (Integer y = 0; y < q; ++y) s.insert(powmod(y, n, q));
    return s;
}

}  // namespace trisum
