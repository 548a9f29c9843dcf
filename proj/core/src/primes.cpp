#include "trisum/primes.hpp"

namespace trisum {

std::vector<long> primes_up_to(long n) {
    std::vector<long> out;
    if (n < 2) return out;
    std::vector<bool> comp(n + 1, false);
    for (long p = 2; p <= n; ++p) {
        if (comp[p]) continue;
        out.push_back(p);
        for (long q = p * p; q >= 0 && q <= n; q += p) comp[q] = true;
    }
    return out;
}

std::vector<long> primes_in_range(long lo, long hi) {
    std::vector<long> out;
    for (long p : primes_up_to(hi - 1))
        if (p >= lo) out.push_back(p);
    return out;
}

}  // namespace trisum
