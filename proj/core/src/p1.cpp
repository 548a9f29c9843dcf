#include "trisum/p1.hpp"
#include <numeric>
#include <stdexcept>

namespace trisum {

namespace {

long lgcd(long a, long b) { return std::gcd(a, b); }

// s*a + t*b = g
long lxgcd(long a, long b, long& s, long& t) {
    if (b == 0) {
        s = (a >= 0) ? 1 : -1;
        t = 0;
        return a >= 0 ? a : -a;
    }
    long s1, t1;
    long g = lxgcd(b, a % b, s1, t1);
    s = t1;
    t = s1 - (a / b) * t1;
    return g;
}

}  // namespace

P1::P1(long N) : n_(N) {
    if (N < 1) throw std::invalid_argument("level must be >= 1");
    if (N == 1) {
        reps_.emplace_back(0, 0);
        idx_[0] = 0;
        return;
    }
    // every class has a representative (g, v) with g | N
    for (long g = 1; g <= N; ++g) {
        if (N % g != 0) continue;
        for (long v = 0; v < N; ++v) {
            auto p = normalize(g % N, v);
            if (p.first == 0 && p.second == 0) continue;
            uint64_t key = static_cast<uint64_t>(p.first) * N + p.second;
            if (idx_.count(key)) continue;
            idx_[key] = static_cast<long>(reps_.size());
            reps_.push_back(p);
        }
    }
}

std::pair<long, long> P1::normalize(long c, long d) const {
    long N = n_;
    if (N == 1) return {0, 0};
    c %= N;
    if (c < 0) c += N;
    d %= N;
    if (d < 0) d += N;
    if (c == 0) return lgcd(d, N) == 1 ? std::make_pair(0L, 1L) : std::make_pair(0L, 0L);
    long g = lgcd(c, N);
    if (lgcd(g, d) > 1) return {0, 0};  // gcd(c, d, N) > 1
    // unit s with s*c == g (mod N)
    long s, t;
    lxgcd(c, N, s, t);
    s %= N;
    if (s < 0) s += N;
    long Ng = N / g;
    while (lgcd(s, N) != 1) s = (s + Ng) % N;
    long v = static_cast<long>((static_cast<__int128>(s) * d) % N);
    // stabilizer of g: units congruent to 1 mod N/g; take the minimal image of v
    long best = v;
    for (long k = 1; k < g; ++k) {
        long u = (1 + k * Ng) % N;
        if (lgcd(u, N) != 1) continue;
        long w = static_cast<long>((static_cast<__int128>(u) * v) % N);
        if (w < best) best = w;
    }
    return {g, best};
}

long P1::index(long c, long d) const {
    auto p = normalize(c, d);
    if (n_ != 1 && p.first == 0 && p.second == 0) return -1;
    auto it = idx_.find(static_cast<uint64_t>(p.first) * n_ + p.second);
    return it == idx_.end() ? -1 : it->second;
}

}  // namespace trisum
