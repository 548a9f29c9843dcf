#ifndef TRISUM_PRIMES_HPP
#define TRISUM_PRIMES_HPP

#include "trisum/integer.hpp"
#include <vector>

namespace trisum {

inline bool is_prime(const Integer& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<long> primes_up_to(long n);

// primes in [lo, hi)
std::vector<long> primes_in_range(long lo, long hi);

inline Integer next_prime(const Integer& n) {
    Integer r;
    mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

}  // namespace trisum

#endif
