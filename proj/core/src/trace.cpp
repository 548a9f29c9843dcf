#include "trisum/trace.hpp"
#include "trisum/primes.hpp"
#include <fstream>
#include <mutex>
#include <sstream>
#include <vector>

namespace trisum {

namespace {

// #E(F_2) by direct enumeration on an integral model
long count_points_f2(const Integer& a1, const Integer& a2, const Integer& a3, const Integer& a4,
                     const Integer& a6) {
    long cnt = 1;  // infinity
    for (long x = 0; x < 2; ++x)
        for (long y = 0; y < 2; ++y) {
            Integer lhs = y * y + a1 * x * y + a3 * y;
            Integer rhs = x * x * x + a2 * x * x + a4 * x + a6;
            if (mod_pos(lhs - rhs, Integer(2)) == 0) ++cnt;
        }
    return cnt;
}

}  // namespace

Integer ap_trace(const WeierstrassModel& E, const Integer& ell, long budget) {
    if (!is_prime(ell)) throw std::invalid_argument("ell not prime");
    if (ell > budget) throw std::invalid_argument("ell exceeds counting budget");
    // an ell-integral model with ell not dividing its discriminant is already
    // minimal at ell, so the reduction is good and no minimalization is needed
    WeierstrassModel M = integral_model(E);
    Integer disc = numer(invariants(M).disc);
    if (divides(ell, disc)) {
        M = minimal_model(E);
        disc = numer(invariants(M).disc);
    }

    if (divides(ell, disc)) {
        ReductionData R = tate_reduction(M, ell);
        if (R.additive()) return 0;
        if (R.multiplicative()) return R.split ? Integer(1) : Integer(-1);
    }

    long l = to_long(ell);
    if (l == 2)
        return Integer(2 + 1 -
                       count_points_f2(numer(M.a1), numer(M.a2), numer(M.a3), numer(M.a4),
                                       numer(M.a6)));

    // complete the square: (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2b4 x + b6
    Invariants I = invariants(M);
    uint64_t p = static_cast<uint64_t>(l);
    auto red = [&](const Rational& q) -> uint64_t {
        return mod_pos(numer(q), Integer(l)).get_ui();
    };
    uint64_t b2 = red(I.b2), b4 = red(I.b4), b6 = red(I.b6);

    // quadratic-character table
    std::vector<int8_t> chi(p, -1);
    chi[0] = 0;
    for (uint64_t y = 1; y <= p / 2; ++y) chi[(y * y) % p] = 1;

    long sum = 0;
    for (uint64_t x = 0; x < p; ++x) {
        uint64_t g = (((4 * x + b2) % p) * x + (2 * b4) % p) % p;
        g = (g * x + b6) % p;
        sum += chi[g];
    }
    return Integer(-sum);
}

std::string model_hash(const WeierstrassModel& E) {
    WeierstrassModel M = minimal_model(E);
    std::ostringstream os;
    os << numer(M.a1).get_str() << "," << numer(M.a2).get_str() << "," << numer(M.a3).get_str()
       << "," << numer(M.a4).get_str() << "," << numer(M.a6).get_str();
    return os.str();
}

void TraceTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) return;
    std::unique_lock lk(mu_);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag, hash, ell_s, a_s;
        if (!(ls >> tag >> hash >> ell_s >> a_s)) continue;
        if (tag != "trace") continue;
        tab_[{hash, Integer(ell_s)}] = Integer(a_s);
    }
}

void TraceTable::save(const std::string& path) const {
    std::shared_lock lk(mu_);
    std::ofstream out(path);
    for (const auto& [key, a] : tab_)
        out << "trace " << key.first << " " << key.second.get_str() << " " << a.get_str()
            << "\n";
}

Integer TraceTable::get_or_compute(const WeierstrassModel& E, const Integer& ell, long budget) {
    std::string h = model_hash(E);
    {
        std::shared_lock lk(mu_);
        auto it = tab_.find({h, ell});
        if (it != tab_.end()) return it->second;
    }
    Integer a = ap_trace(E, ell, budget);
    std::unique_lock lk(mu_);
    tab_[{h, ell}] = a;
    return a;
}

size_t TraceTable::size() const {
    std::shared_lock lk(mu_);
    return tab_.size();
}

}  // namespace trisum
