#include "trisum/weierstrass.hpp"
#include <sstream>

namespace trisum {

std::string WeierstrassModel::str() const {
    std::ostringstream os;
    os << "[" << a1.get_str() << "," << a2.get_str() << "," << a3.get_str() << ","
       << a4.get_str() << "," << a6.get_str() << "]";
    return os.str();
}

Invariants invariants(const WeierstrassModel& E) {
    Invariants I;
    I.b2 = E.a1 * E.a1 + 4 * E.a2;
    I.b4 = 2 * E.a4 + E.a1 * E.a3;
    I.b6 = E.a3 * E.a3 + 4 * E.a6;
    I.b8 = E.a1 * E.a1 * E.a6 + 4 * E.a2 * E.a6 - E.a1 * E.a3 * E.a4 + E.a2 * E.a3 * E.a3 -
           E.a4 * E.a4;
    I.c4 = I.b2 * I.b2 - 24 * I.b4;
    I.c6 = -I.b2 * I.b2 * I.b2 + 36 * I.b2 * I.b4 - 216 * I.b6;
    I.disc = -I.b2 * I.b2 * I.b8 - 8 * I.b4 * I.b4 * I.b4 - 27 * I.b6 * I.b6 +
             9 * I.b2 * I.b4 * I.b6;
    return I;
}

bool is_singular(const WeierstrassModel& E) { return invariants(E).disc == 0; }

bool is_integral(const WeierstrassModel& E) {
    return is_integer(E.a1) && is_integer(E.a2) && is_integer(E.a3) && is_integer(E.a4) &&
           is_integer(E.a6);
}

Rational j_invariant(const WeierstrassModel& E) {
    Invariants I = invariants(E);
    if (I.disc == 0) throw std::domain_error("singular model");
    return I.c4 * I.c4 * I.c4 / I.disc;
}

WeierstrassModel transform(const WeierstrassModel& E, const Rational& u, const Rational& r,
                           const Rational& s, const Rational& t) {
    if (u == 0) throw std::invalid_argument("u = 0");
    WeierstrassModel F;
    Rational u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
    F.a1 = (E.a1 + 2 * s) / u;
    F.a2 = (E.a2 - s * E.a1 + 3 * r - s * s) / u2;
    F.a3 = (E.a3 + r * E.a1 + 2 * t) / u3;
    F.a4 = (E.a4 - s * E.a3 + 2 * r * E.a2 - (t + r * s) * E.a1 + 3 * r * r - 2 * s * t) / u4;
    F.a6 = (E.a6 + r * E.a4 + r * r * E.a2 + r * r * r - t * E.a3 - t * t - r * t * E.a1) / u6;
    return F;
}

WeierstrassModel integral_model(const WeierstrassModel& E) {
    Integer m(1);
    m = ilcm(m, denom(E.a1));
    m = ilcm(m, denom(E.a2));
    m = ilcm(m, denom(E.a3));
    m = ilcm(m, denom(E.a4));
    m = ilcm(m, denom(E.a6));
    if (m == 1) return E;
    return transform(E, rat(1, m), 0, 0, 0);
}

WeierstrassModel quadratic_twist(const WeierstrassModel& E, const Integer& D) {
    if (D == 0) throw std::invalid_argument("twist by zero");
    Invariants I = invariants(E);
    if (I.disc == 0) throw std::domain_error("singular model");
    // short form y^2 = x^3 + (b2/4) x^2 + (b4/2) x + b6/4, then scale by D
    Rational A2 = I.b2 / 4, A4 = I.b4 / 2, A6 = I.b6 / 4;
    Rational d(D);
    return WeierstrassModel{Rational(0), d * A2, Rational(0), d * d * A4, d * d * d * A6};
}

}  // namespace trisum
