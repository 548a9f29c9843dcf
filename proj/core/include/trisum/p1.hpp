#ifndef TRISUM_P1_HPP
#define TRISUM_P1_HPP

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace trisum {

// P^1(Z/N): normalized representatives (c : d) and index lookup.
class P1 {
public:
    explicit P1(long N);

    long N() const { return n_; }
    long size() const { return static_cast<long>(reps_.size()); }
    const std::pair<long, long>& rep(long i) const { return reps_[i]; }

    // index of the class of (c : d); -1 when gcd(c, d, N) > 1
    long index(long c, long d) const;

    // canonical representative; (0, 0) marks an invalid pair
    std::pair<long, long> normalize(long c, long d) const;

private:
    long n_;
    std::vector<std::pair<long, long>> reps_;
    std::unordered_map<uint64_t, long> idx_;
};

}  // namespace trisum

#endif
