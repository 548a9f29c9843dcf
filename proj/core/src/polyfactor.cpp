#include "trisum/polyfactor.hpp"
#include "trisum/primes.hpp"
#include <algorithm>
#include <map>

namespace trisum {

namespace {

// ---- dense polynomial arithmetic over F_p, p a word-size odd prime ----

using ModPoly = std::vector<uint64_t>;  // ascending, trimmed

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

uint64_t powmod_u64(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}

uint64_t invmod_u64(uint64_t a, uint64_t p) { return powmod_u64(a, p - 2, p); }

void mp_trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long mp_deg(const ModPoly& a) { return static_cast<long>(a.size()) - 1; }

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + static_cast<__uint128_t>(a[i]) * b[j]) % p;
    }
    mp_trim(r);
    return r;
}

ModPoly mp_sub(const ModPoly& a, const ModPoly& b, uint64_t p) {
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
    mp_trim(r);
    return r;
}

ModPoly mp_rem(ModPoly a, const ModPoly& d, uint64_t p) {
    long dd = mp_deg(d);
    uint64_t inv = invmod_u64(d.back(), p);
    while (mp_deg(a) >= dd) {
        long da = mp_deg(a);
        uint64_t f = mulmod(a.back(), inv, p);
        for (long j = 0; j <= dd; ++j)
            a[da - dd + j] = (a[da - dd + j] + p - mulmod(f, d[j], p)) % p;
        mp_trim(a);
    }
    return a;
}

ModPoly mp_divexact(ModPoly a, const ModPoly& d, uint64_t p) {
    long dd = mp_deg(d);
    uint64_t inv = invmod_u64(d.back(), p);
    ModPoly q(std::max<long>(mp_deg(a) - dd + 1, 0), 0);
    while (mp_deg(a) >= dd) {
        long da = mp_deg(a);
        uint64_t f = mulmod(a.back(), inv, p);
        q[da - dd] = f;
        for (long j = 0; j <= dd; ++j)
            a[da - dd + j] = (a[da - dd + j] + p - mulmod(f, d[j], p)) % p;
        mp_trim(a);
    }
    if (!a.empty()) throw std::logic_error("mp_divexact: nonzero remainder");
    mp_trim(q);
    return q;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, uint64_t p) {
    while (!b.empty()) {
        ModPoly r = mp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        uint64_t inv = invmod_u64(a.back(), p);
        for (auto& x : a) x = mulmod(x, inv, p);
    }
    return a;
}

ModPoly mp_powmod(ModPoly base, Integer e, const ModPoly& mod, uint64_t p) {
    ModPoly r = {1};
    base = mp_rem(std::move(base), mod, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = mp_rem(mp_mul(r, base, p), mod, p);
        base = mp_rem(mp_mul(base, base, p), mod, p);
        e >>= 1;
    }
    return r;
}

ModPoly mp_deriv(const ModPoly& a, uint64_t p) {
    if (a.size() <= 1) return {};
    ModPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = mulmod(a[i], i % p, p);
    mp_trim(r);
    return r;
}

// Cantor-Zassenhaus: monic squarefree f over F_p -> monic irreducible factors
void cz_factor(const ModPoly& f, uint64_t p, gmp_randclass& rng, std::vector<ModPoly>& out) {
    long n = mp_deg(f);
    if (n <= 0) return;
    if (n == 1) {
        out.push_back(f);
        return;
    }
    // distinct-degree split
    ModPoly x = {0, 1};
    ModPoly h = x;
    ModPoly rest = f;
    std::vector<std::pair<ModPoly, long>> dd;  // (product of irreducibles of degree d, d)
    for (long d = 1; 2 * d <= mp_deg(rest); ++d) {
        h = mp_powmod(std::move(h), Integer(static_cast<unsigned long>(p)), rest, p);
        ModPoly g = mp_gcd(mp_sub(h, x, p), rest, p);
        if (mp_deg(g) > 0) {
            dd.emplace_back(g, d);
            rest = mp_divexact(rest, g, p);
            h = mp_rem(std::move(h), rest, p);
        }
    }
    if (mp_deg(rest) > 0) dd.emplace_back(rest, mp_deg(rest));

    // equal-degree split within each block
    for (auto& [block, d] : dd) {
        std::vector<ModPoly> work = {block};
        std::vector<ModPoly> done;
        Integer exp = (ipow(Integer(static_cast<unsigned long>(p)), d) - 1) / 2;
        while (!work.empty()) {
            ModPoly g = work.back();
            work.pop_back();
            if (mp_deg(g) == d) {
                done.push_back(g);
                continue;
            }
            // random split
            for (;;) {
                ModPoly r(mp_deg(g), 0);
                for (auto& c : r) {
                    Integer z = rng.get_z_range(Integer(static_cast<unsigned long>(p)));
                    c = z.get_ui();
                }
                mp_trim(r);
                if (r.empty()) continue;
                ModPoly t = mp_powmod(r, exp, g, p);
                if (t.empty()) continue;
                t[0] = (t[0] + p - 1) % p;
                mp_trim(t);
                ModPoly w = mp_gcd(t, g, p);
                if (mp_deg(w) > 0 && mp_deg(w) < mp_deg(g)) {
                    work.push_back(w);
                    work.push_back(mp_divexact(g, w, p));
                    break;
                }
            }
        }
        for (auto& g : done) out.push_back(g);
    }
}

ModPoly to_mod(const PolyZ& f, uint64_t p) {
    ModPoly r(f.coeffs().size());
    Integer P(static_cast<unsigned long>(p));
    for (size_t i = 0; i < r.size(); ++i) r[i] = mod_pos(f[i], P).get_ui();
    mp_trim(r);
    return r;
}

PolyZ lift_sym(const std::vector<Integer>& c, const Integer& pk) {
    std::vector<Integer> r(c.size());
    for (size_t i = 0; i < c.size(); ++i) r[i] = mod_sym(c[i], pk);
    return PolyZ(std::move(r));
}

}  // namespace

std::vector<PolyFactor> squarefree_decomposition(const PolyZ& f) {
    if (!f.is_monic()) throw std::domain_error("squarefree_decomposition: not monic");
    std::vector<PolyFactor> out;
    PolyZ a = f;
    PolyZ g = poly_gcd(a, a.derivative());
    PolyZ c = a.divexact(g);
    PolyZ d = a.derivative().divexact(g) - c.derivative();
    unsigned long i = 1;
    while (c.degree() > 0) {
        PolyZ fi = poly_gcd(c, d);
        if (fi.degree() > 0) out.push_back({fi, i});
        c = c.divexact(fi);
        d = d.divexact(fi) - c.derivative();
        ++i;
    }
    return out;
}

namespace {

// factor monic squarefree f
std::vector<PolyZ> factor_squarefree(const PolyZ& f) {
    long n = f.degree();
    if (n <= 1) return {f};

    gmp_randclass rng(gmp_randinit_default);
    rng.seed(987654321);

    // pick a prime keeping f squarefree mod p, preferring few modular factors
    Integer disc = resultant(f, f.derivative());
    uint64_t best_p = 0;
    std::vector<ModPoly> best_factors;
    Integer p("1000003");
    for (int tries = 0; tries < 5;) {
        p = next_prime(p);
        if (divides(p, disc)) continue;
        ++tries;
        uint64_t pu = p.get_ui();
        ModPoly fm = to_mod(f, pu);
        std::vector<ModPoly> fac;
        cz_factor(fm, pu, rng, fac);
        if (best_p == 0 || fac.size() < best_factors.size()) {
            best_p = pu;
            best_factors = std::move(fac);
        }
        if (best_factors.size() <= 2) break;
    }
    uint64_t pu = best_p;
    Integer P(static_cast<unsigned long>(pu));
    std::vector<ModPoly>& mf = best_factors;
    if (mf.size() == 1) return {f};

    // Mignotte-style bound on factor coefficients: 2^n * (n+1) * ||f||_inf
    Integer norm(0);
    for (const auto& c : f.coeffs()) norm = std::max(norm, iabs(c));
    Integer bound = ipow(Integer(2), n + 1) * Integer(n + 1) * norm;

    // linear Hensel lifting of the full factor list
    std::vector<PolyZ> lifted;
    for (const auto& g : mf) {
        std::vector<Integer> c(g.size());
        for (size_t i = 0; i < g.size(); ++i) c[i] = Integer(static_cast<unsigned long>(g[i]));
        lifted.push_back(lift_sym(c, P));
    }
    // Bezout data mod p: inv_i = (prod_{j != i} g_j)^{-1} mod g_i
    std::vector<ModPoly> bez(mf.size());
    for (size_t i = 0; i < mf.size(); ++i) {
        ModPoly prod = {1};
        for (size_t j = 0; j < mf.size(); ++j)
            if (j != i) prod = mp_rem(mp_mul(prod, mf[j], pu), mf[i], pu);
        // invert prod mod g_i via extended Euclid: maintain s_k*a == r_k (mod b)
        ModPoly a = prod, b = mf[i];
        ModPoly rk_1 = b, rk = a;
        ModPoly sk_1 = {}, sk = {1};
        while (mp_deg(rk) > 0) {
            // q, rem of rk_1 / rk
            ModPoly rem = rk_1;
            ModPoly q(std::max<long>(mp_deg(rk_1) - mp_deg(rk) + 1, 0), 0);
            uint64_t inv = invmod_u64(rk.back(), pu);
            while (mp_deg(rem) >= mp_deg(rk)) {
                long dr = mp_deg(rem), dk = mp_deg(rk);
                uint64_t fq = mulmod(rem.back(), inv, pu);
                q[dr - dk] = fq;
                for (long jj = 0; jj <= dk; ++jj)
                    rem[dr - dk + jj] = (rem[dr - dk + jj] + pu - mulmod(fq, rk[jj], pu)) % pu;
                mp_trim(rem);
            }
            ModPoly snew = mp_sub(sk_1, mp_mul(q, sk, pu), pu);
            rk_1 = rk;
            rk = rem;
            sk_1 = sk;
            sk = snew;
        }
        if (rk.empty()) throw std::logic_error("factors not coprime mod p");
        uint64_t inv0 = invmod_u64(rk[0], pu);
        for (auto& x : sk) x = mulmod(x, inv0, pu);
        bez[i] = mp_rem(std::move(sk), mf[i], pu);
    }

    Integer pk = P;
    while (pk <= 2 * bound) {
        // error e = (f - prod lifted)/p^k mod p
        PolyZ prod = PolyZ::constant(1);
        for (const auto& g : lifted) prod = prod * g;
        PolyZ e = f - prod;
        std::vector<Integer> ec(e.coeffs());
        for (auto& x : ec) x = trisum::divexact(x, pk);
        PolyZ ered({});
        {
            std::vector<Integer> tmp(ec);
            for (auto& x : tmp) x = mod_pos(x, P);
            ered = PolyZ(std::move(tmp));
        }
        ModPoly em = to_mod(ered, pu);
        for (size_t i = 0; i < lifted.size(); ++i) {
            // delta_i = e * bez_i mod g_i (mod p)
            ModPoly di = mp_rem(mp_mul(em, bez[i], pu), mf[i], pu);
            std::vector<Integer> gc(lifted[i].coeffs());
            gc.resize(std::max(gc.size(), di.size()), Integer(0));
            for (size_t j = 0; j < di.size(); ++j)
                gc[j] += pk * Integer(static_cast<unsigned long>(di[j]));
            lifted[i] = lift_sym(gc, pk * P);
        }
        pk *= P;
    }

    // subset recombination: try subset products of increasing size; once no
    // subset of size <= pool/2 divides, the remainder is irreducible
    std::vector<PolyZ> result;
    std::vector<PolyZ> pool = lifted;
    PolyZ rem_f = f;
    for (size_t take = 1; !pool.empty() && take * 2 <= pool.size();) {
        bool extracted = false;
        std::vector<size_t> idx(take);
        for (size_t i = 0; i < take; ++i) idx[i] = i;
        for (;;) {
            PolyZ cand = PolyZ::constant(1);
            for (size_t i : idx) cand = cand * pool[i];
            cand = lift_sym(cand.coeffs(), pk);
            if (rem_f.degree() >= cand.degree()) {
                PolyZ q, r;
                PolyZ::divmod_monic(rem_f, cand, q, r);
                if (r.is_zero()) {
                    result.push_back(cand);
                    rem_f = q;
                    std::vector<PolyZ> np;
                    for (size_t i = 0, k = 0; i < pool.size(); ++i) {
                        if (k < idx.size() && idx[k] == i) { ++k; continue; }
                        np.push_back(pool[i]);
                    }
                    pool = std::move(np);
                    extracted = true;
                    break;
                }
            }
            long pos = static_cast<long>(take) - 1;
            while (pos >= 0 &&
                   idx[pos] == pool.size() - take + static_cast<size_t>(pos))
                --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (size_t i = pos + 1; i < take; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!extracted) ++take;
    }
    if (rem_f.degree() > 0) result.push_back(rem_f);
    std::sort(result.begin(), result.end(), [](const PolyZ& a, const PolyZ& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.coeffs() < b.coeffs();
    });
    return result;
}

}  // namespace

std::vector<PolyFactor> factor_monic(const PolyZ& f) {
    if (!f.is_monic()) throw std::domain_error("factor_monic: not monic");
    std::vector<PolyFactor> out;
    for (const auto& [g, mult] : squarefree_decomposition(f)) {
        for (const auto& irr : factor_squarefree(g)) out.push_back({irr, mult});
    }
    std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
        if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
        return a.factor.coeffs() < b.factor.coeffs();
    });
    return out;
}

std::vector<long> factor_degrees(const PolyZ& f) {
    std::vector<long> deg;
    for (const auto& pf : factor_monic(f))
        for (unsigned long i = 0; i < pf.multiplicity; ++i) deg.push_back(pf.factor.degree());
    std::sort(deg.begin(), deg.end());
    return deg;
}

}  // namespace trisum
