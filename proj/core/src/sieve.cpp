#include "trisum/sieve.hpp"
#include "trisum/parallel.hpp"
#include "trisum/primes.hpp"
#include "trisum/trace.hpp"

namespace trisum {

namespace {

// v_ell of the family discriminant at x = a; the rational denominator must be
// an ell-unit for the admissible ell
bool ell_divides_disc(const FreyFamily& fam, const Integer& a, long ell) {
    Rational d = family_invariants(fam).disc.eval(Rational(a));
    if (d == 0) return true;
    Integer l(ell);
    if (divides(l, denom(d))) throw std::invalid_argument("ell is a bad prime of the family");
    return divides(l, numer(d));
}

Integer eval_abs(const PolyZ& m, const Integer& x) { return iabs(m.eval(x)); }

}  // namespace

Integer local_term(const FreyFamily& fam, const Integer& a, long ell, const NewformClass& form) {
    if (a < 0 || a >= ell) throw std::invalid_argument("residue out of range");
    if (form.level % ell == 0) throw std::invalid_argument("ell divides the form level");
    PolyZ m = form.m_ell(ell);
    Integer L(ell);
    if (ell_divides_disc(fam, a, ell)) {
        return eval_abs(m, L + 1) * eval_abs(m, -(L + 1));
    }
    Integer ap = ap_trace(fam.at(a), L);
    return eval_abs(m, ap);
}

Integer single_bound_Bl(const FreyFamily& fam, const NewformClass& form, long ell) {
    Integer B(ell);
    for (Integer a = 0; a < ell; ++a) {
        B *= local_term(fam, a, ell, form);
        if (B == 0) return B;
    }
    return B;
}

FactoredInteger single_bound_B(const FreyFamily& fam, const NewformClass& form,
                               const std::vector<long>& ells, unsigned jobs) {
    if (ells.empty()) throw std::invalid_argument("empty prime set");
    std::vector<Integer> bs(ells.size());
    parallel_for(ells.size(), jobs,
                 [&](size_t i) { bs[i] = single_bound_Bl(fam, form, ells[i]); });
    Integer g(0);
    for (const auto& b : bs) g = igcd(g, b);
    if (g == 0) {
        FactoredInteger z;
        z.zero = true;
        return z;
    }
    return trial_factor(g, Integer(1000000));
}

FactoredInteger multi_frey_U(const FreyFamily& famE, const FreyFamily& famF,
                             const NewformClass& f, const NewformClass& g,
                             const std::vector<long>& ells, unsigned jobs) {
    if (ells.empty()) throw std::invalid_argument("empty prime set");
    if (famE.alpha != famF.alpha)
        throw std::invalid_argument("family alpha mismatch");
    std::vector<Integer> ts(ells.size());
    parallel_for(ells.size(), jobs, [&](size_t i) {
        long ell = ells[i];
        Integer T(ell);
        for (Integer a = 0; a < ell && T != 0; ++a) {
            Integer R = local_term(famE, a, ell, f);
            Integer S = local_term(famF, a, ell, g);
            T *= igcd(R, S);
        }
        ts[i] = T;
    });
    Integer u(0);
    for (const auto& t : ts) u = igcd(u, t);
    if (u == 0) {
        FactoredInteger z;
        z.zero = true;
        return z;
    }
    return trial_factor(u, Integer(1000000));
}

PolyZ heckepoly_Cprime(const PolyZ& C, const std::vector<Integer>& rational_traces) {
    PolyZ out = C;
    for (const Integer& a : rational_traces) {
        PolyZ lin({-a, Integer(1)});
        PolyZ q, r;
        PolyZ::divmod_monic(out, lin, q, r);
        if (!r.is_zero()) throw std::invalid_argument("rational form trace mismatch");
        out = q;
    }
    return out;
}

Integer heckepoly_Bl(const PolyZ& Cprime, long ell, bool printed_variant) {
    if (ell == 2 || ell == 3 || ell == 3391)
        throw std::invalid_argument("ell excluded for the k=6 Hecke bound");
    FreyFamily fam = frey_k6_family();
    Integer L(ell);
    Integer B(ell);
    for (Integer a = 0; a < ell && B != 0; ++a) {
        Integer R;
        if (ell_divides_disc(fam, a, ell)) {
            Integer second = printed_variant ? Integer(L - 1) : Integer(-(L + 1));
            R = Cprime.eval(L + 1) * Cprime.eval(second);
        } else {
            R = Cprime.eval(ap_trace(fam.at(a), L));
        }
        B *= R;
    }
    return B;
}

Integer heckepoly_B2(const PolyZ& Cprime2) { return Cprime2.eval(Integer(2)); }

bool exponent_obstruction(const PolyZ& P, const Integer& q, const Integer& n) {
    std::set<Integer> powers = power_residues(q, n);
    for (Integer t = 0; t < q; ++t)
        if (powers.count(P.eval_mod(t, q))) return false;
    return true;
}

std::vector<long> admissible_ells_k5_E() {
    std::vector<long> out = {3};
    for (long p : primes_in_range(11, 98)) out.push_back(p);
    return out;
}

std::vector<long> admissible_ells_k5_F() { return primes_in_range(11, 98); }

std::vector<long> admissible_ells_k6() {
    std::vector<long> out = {2};
    for (long p : primes_in_range(5, 98)) out.push_back(p);
    return out;
}

SieveReport SieveReport::accumulate(const std::string& ids,
                                    const std::vector<std::pair<long, Integer>>& bounds,
                                    const Integer& survivor_threshold) {
    SieveReport rep;
    rep.form_ids = ids;
    Integer g(0);
    for (const auto& [ell, b] : bounds) {
        FactoredInteger fb;
        if (b == 0) fb.zero = true;
        else fb = trial_factor(b, Integer(1000000));
        rep.per_ell.emplace_back(ell, fb);
        g = igcd(g, b);
    }
    if (g == 0) rep.accumulated.zero = true;
    else rep.accumulated = trial_factor(g, Integer(1000000));
    if (g != 0)
        for (const Integer& p : rep.accumulated.prime_support())
            if (p >= survivor_threshold) rep.surviving_primes.push_back(p);
    return rep;
}

}  // namespace trisum
