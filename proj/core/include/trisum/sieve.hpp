#ifndef TRISUM_SIEVE_HPP
#define TRISUM_SIEVE_HPP

#include "trisum/factored.hpp"
#include "trisum/frey.hpp"
#include "trisum/newform.hpp"
#include <vector>

namespace trisum {

// Exponent-bounding machinery. Norms are taken as m_ell evaluations: the
// prime support agrees with the true field norm, which is all the bound needs.

// Local congruence term at residue a (0 <= a < ell, ell coprime to the form's
// level): |m_ell(ell+1) m_ell(-ell-1)| when ell divides the family discriminant
// at a, else |m_ell(a_ell(E_a))|.
Integer local_term(const FreyFamily& fam, const Integer& a, long ell, const NewformClass& form);

// B_ell = ell * prod_a local_term(a)
Integer single_bound_Bl(const FreyFamily& fam, const NewformClass& form, long ell);

// gcd of the B_ell over an admissible prime set, reported factored
FactoredInteger single_bound_B(const FreyFamily& fam, const NewformClass& form,
                               const std::vector<long>& ells, unsigned jobs = 1);

// T_ell(f,g) = ell * prod_a gcd(R_ell(f,a), S_ell(g,a)); U = gcd over the range
FactoredInteger multi_frey_U(const FreyFamily& famE, const FreyFamily& famF,
                             const NewformClass& f, const NewformClass& g,
                             const std::vector<long>& ells, unsigned jobs = 1);

// C'_ell(t) = C_ell(t) / prod (t - a_i); throws std::invalid_argument
// ("rational form trace mismatch") if a factor does not divide
PolyZ heckepoly_Cprime(const PolyZ& C, const std::vector<Integer>& rational_traces);

// Hecke-polynomial bound for the k=6 family at odd ell not in {3, 3391}:
// B_ell = ell * prod_{a=0}^{ell-1} R_ell(a) with
// R_ell(a) = C'(ell+1) C'(-ell-1)   [faithful]   if ell | Delta(a)
//          = C'(ell+1) C'(ell-1)    [printed variant]
//          = C'(a_ell(E_a))         otherwise.
Integer heckepoly_Bl(const PolyZ& Cprime, long ell, bool printed_variant = false);

// B_2 = C'_2(2); valid because a_2(E_x) = 2 for all odd x
Integer heckepoly_B2(const PolyZ& Cprime2);

// true iff the value set of P mod q misses every n-th power residue
bool exponent_obstruction(const PolyZ& P, const Integer& q, const Integer& n);

// admissible prime sets fixed by the level data
std::vector<long> admissible_ells_k5_E();  // {3} and primes in [11, 97]
std::vector<long> admissible_ells_k5_F();  // primes in [11, 97]
std::vector<long> admissible_ells_k6();    // {2} and primes in [5, 97] except 3

// per-ell provenance of an accumulated bound
struct SieveReport {
    std::string form_ids;
    std::vector<std::pair<long, FactoredInteger>> per_ell;
    FactoredInteger accumulated;             // gcd over the per-ell bounds
    std::vector<Integer> surviving_primes;   // primes >= threshold dividing the gcd

    static SieveReport accumulate(const std::string& ids,
                                  const std::vector<std::pair<long, Integer>>& bounds,
                                  const Integer& survivor_threshold = Integer(11));
};

}  // namespace trisum

#endif
