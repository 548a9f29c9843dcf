#ifndef TRISUM_FACTORED_HPP
#define TRISUM_FACTORED_HPP

#include "trisum/integer.hpp"
#include <map>
#include <set>
#include <string>

namespace trisum {

// Integer kept as sign * prod(p^e) * cofactor. Listed primes are distinct and
// at most the trial-division bound used to produce them; the cofactor collects
// whatever was left unfactored.
struct FactoredInteger {
    int sign = 1;  // +1 or -1; sign of zero represented by value()==0
    std::map<Integer, unsigned long> factors;
    Integer cofactor = 1;
    bool zero = false;

    Integer value() const;
    bool is_one() const { return !zero && sign == 1 && factors.empty() && cofactor == 1; }
    // primes >= threshold dividing the represented value (cofactor included when nontrivial)
    std::set<Integer> prime_support() const;
    std::string str() const;  // e.g. "2^27 * 3^28 * 5^3 * 7"
};

// all prime factors <= bound extracted; n != 0, bound >= 2
FactoredInteger trial_factor(const Integer& n, const Integer& bound);

// full factorization via trial division plus Pollard rho; intended for the
// moderate composites this library produces (conductors, discriminants)
std::map<Integer, unsigned long> factor_full(const Integer& n);

// { y^n mod q : y in Z/q }, q a prime power, n >= 1
std::set<Integer> power_residues(const Integer& q, const Integer& n);

}  // namespace trisum

#endif
