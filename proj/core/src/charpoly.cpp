#include "trisum/charpoly.hpp"
#include "trisum/parallel.hpp"
#include "trisum/primes.hpp"
#include <mutex>

namespace trisum {

namespace {

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

inline uint64_t addmod(uint64_t a, uint64_t b, uint64_t p) {
    uint64_t s = a + b;
    if (s >= p || s < a) s -= p;
    return s;
}

inline uint64_t submod(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }

uint64_t powmod_u64(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}

uint64_t invmod_u64(uint64_t a, uint64_t p) { return powmod_u64(a % p, p - 2, p); }

}  // namespace

// Hessenberg-form characteristic polynomial over F_p (Cohen alg. 2.2.9).
// Returns ascending coefficients, degree n, monic.
std::vector<uint64_t> charpoly_mod(const std::vector<uint64_t>& flat, long n, uint64_t p) {
    std::vector<uint64_t> H(flat);
    auto h = [&](long i, long j) -> uint64_t& { return H[i * n + j]; };
    // reduce to upper Hessenberg by similarity transforms
    for (long m = 1; m < n; ++m) {
        // column m-1, rows m..n-1
        long piv = -1;
        for (long i = m; i < n; ++i)
            if (h(i, m - 1) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != m) {
            for (long j = 0; j < n; ++j) std::swap(h(piv, j), h(m, j));
            for (long i = 0; i < n; ++i) std::swap(h(i, piv), h(i, m));
        }
        uint64_t inv = invmod_u64(h(m, m - 1), p);
        for (long i = m + 1; i < n; ++i) {
            if (h(i, m - 1) == 0) continue;
            uint64_t u = mulmod(h(i, m - 1), inv, p);
            for (long j = 0; j < n; ++j) h(i, j) = submod(h(i, j), mulmod(u, h(m, j), p), p);
            for (long k = 0; k < n; ++k) h(k, m) = addmod(h(k, m), mulmod(u, h(k, i), p), p);
        }
    }
    // p_m(t) = (t - h_mm) p_{m-1}(t) - sum_i h_im (prod subdiag) p_{i-1}(t)
    std::vector<std::vector<uint64_t>> P(n + 1);
    P[0] = {1 % p};
    for (long m = 1; m <= n; ++m) {
        std::vector<uint64_t> poly(m + 1, 0);
        uint64_t hm = h(m - 1, m - 1);
        // (t - h_mm) * P[m-1]
        for (long k = 0; k < m; ++k) {
            poly[k + 1] = addmod(poly[k + 1], P[m - 1][k], p);
            poly[k] = submod(poly[k], mulmod(hm, P[m - 1][k], p), p);
        }
        uint64_t prod = 1 % p;
        for (long i = m - 1; i >= 1; --i) {
            prod = mulmod(prod, h(i, i - 1), p);
            uint64_t c = mulmod(h(i - 1, m - 1), prod, p);
            if (c == 0) continue;
            for (long k = 0; k < i; ++k) poly[k] = submod(poly[k], mulmod(c, P[i - 1][k], p), p);
        }
        P[m] = std::move(poly);
    }
    return P[n];
}

PolyQ charpoly_exact(const MatQ& M, unsigned jobs) {
    if (M.rows() != M.cols()) throw std::invalid_argument("non-square matrix");
    long n = M.rows();
    if (n == 0) return PolyQ({Rational(1)});

    // clear denominators: A = den * M is integral
    Integer den(1);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) den = ilcm(den, denom(M.at(i, j)));
    std::vector<Integer> A(n * n);
    Integer maxabs(1);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            const Rational& x = M.at(i, j);
            A[i * n + j] = numer(x) * divexact(den, denom(x));
            Integer m = iabs(A[i * n + j]);
            if (m > maxabs) maxabs = m;
        }

    // per-coefficient bound: |c_k| <= C(n,k) (B sqrt(k))^k; take max over k
    Integer bound(1);
    for (long k = 1; k <= n; ++k) {
        Integer binom;
        mpz_bin_uiui(binom.get_mpz_t(), n, k);
        Integer term = binom * ipow(maxabs, k) * ipow(Integer(k), (k + 1) / 2);
        if (term > bound) bound = term;
    }
    bound *= 2;  // symmetric range

    // deterministic prime sequence just under 2^62
    std::vector<uint64_t> primes;
    {
        Integer prod(1);
        Integer p("4611686018427387847");  // below 2^62
        while (prod <= bound) {
            p = next_prime(p);
            primes.push_back(p.get_ui());
            prod *= p;
        }
    }

    std::vector<std::vector<uint64_t>> residues(primes.size());
    parallel_for(primes.size(), jobs, [&](size_t idx) {
        uint64_t p = primes[idx];
        std::vector<uint64_t> flat(n * n);
        for (long i = 0; i < n * n; ++i) {
            Integer r = mod_pos(A[i], Integer(static_cast<unsigned long>(p)));
            flat[i] = r.get_ui();
        }
        residues[idx] = charpoly_mod(flat, n, p);
    });

    // CRT each coefficient, symmetric lift
    std::vector<Integer> cz(n + 1);
    Integer modulus(1);
    for (uint64_t p : primes) modulus *= Integer(static_cast<unsigned long>(p));
    for (long k = 0; k <= n; ++k) {
        Integer acc(0), m(1);
        for (size_t idx = 0; idx < primes.size(); ++idx) {
            Integer p(static_cast<unsigned long>(primes[idx]));
            Integer r(static_cast<unsigned long>(residues[idx][k]));
            if (idx == 0) {
                acc = r;
                m = p;
            } else {
                // acc' == acc mod m, == r mod p
                Integer t = mod_pos((r - acc) * mod_inverse(m, p), p);
                acc += m * t;
                m *= p;
            }
        }
        cz[k] = mod_sym(acc, modulus);
    }

    // char_M(t) = den^{-n} char_A(den t): coefficient of t^k scales by den^{k-n}
    std::vector<Rational> out(n + 1);
    for (long k = 0; k <= n; ++k) {
        Rational q(cz[k], ipow(den, n - k));
        q.canonicalize();
        out[k] = q;
    }
    PolyQ result{std::move(out)};
    if (result.degree() != n) throw std::logic_error("charpoly: degree mismatch");
    return result;
}

}  // namespace trisum
