#ifndef TRISUM_WEIERSTRASS_HPP
#define TRISUM_WEIERSTRASS_HPP

#include "trisum/integer.hpp"
#include <string>

namespace trisum {

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q.
// Singular models (disc = 0) are allowed; operations needing a curve reject them.
struct WeierstrassModel {
    Rational a1, a2, a3, a4, a6;

    bool operator==(const WeierstrassModel& o) const = default;
    std::string str() const;
};

struct Invariants {
    Rational b2, b4, b6, b8, c4, c6, disc;
};

Invariants invariants(const WeierstrassModel& E);

// j-invariant; throws std::domain_error("singular model") when disc = 0
Rational j_invariant(const WeierstrassModel& E);

bool is_singular(const WeierstrassModel& E);
bool is_integral(const WeierstrassModel& E);

// standard change of model x = u^2 x' + r, y = u^3 y' + s u^2 x' + t; u != 0
WeierstrassModel transform(const WeierstrassModel& E, const Rational& u, const Rational& r,
                           const Rational& s, const Rational& t);

// integral model Q-isomorphic to E (scaling transform only)
WeierstrassModel integral_model(const WeierstrassModel& E);

// quadratic twist by a nonzero integer D; j preserved, input must be nonsingular
WeierstrassModel quadratic_twist(const WeierstrassModel& E, const Integer& D);

}  // namespace trisum

#endif
