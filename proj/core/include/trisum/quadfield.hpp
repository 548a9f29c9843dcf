#ifndef TRISUM_QUADFIELD_HPP
#define TRISUM_QUADFIELD_HPP

#include "trisum/integer.hpp"
#include <array>
#include <string>

namespace trisum {

// (r + s sqrt(70)) / d with d >= 1 and gcd(r, s, d) = 1
struct QuadElem {
    Integer r, s, d = 1;

    QuadElem() : r(0), s(0), d(1) {}
    QuadElem(Integer r_, Integer s_, Integer d_ = 1);

    QuadElem operator*(const QuadElem& o) const;
    QuadElem operator-() const { return QuadElem(-r, -s, d); }
    bool operator==(const QuadElem& o) const = default;
    QuadElem conj() const { return QuadElem(r, -s, d); }
    QuadElem pow(long e) const;  // negative e allowed for units
    Rational norm() const;       // (r^2 - 70 s^2) / d^2
    bool is_integral() const { return d == 1; }
    std::string str() const;
};

// fundamental unit of Z[sqrt(70)] by the continued-fraction expansion;
// norm is +-1 by construction
QuadElem fundamental_unit();

// continued-fraction expansion data of sqrt(n): returns the fundamental
// Pell solution (x, y) to x^2 - n y^2 = +-1, smallest x > 1
std::pair<Integer, Integer> pell_fundamental(const Integer& n);

// The five prime ideals the descent uses, in a fixed order:
// P2 = (2, sqrt70), P3 = (3, 1+sqrt70), P3' = (3, 1-sqrt70),
// P5 = (25+3 sqrt70), P7 = (7, sqrt70).
enum QuadPrime { P2 = 0, P3 = 1, P3c = 2, P5 = 3, P7 = 4 };

// exponent vector over (P2, P3, P3', P5, P7); negative exponents allowed
struct IdealSpec {
    std::array<long, 5> e{0, 0, 0, 0, 0};

    Rational norm() const;  // 2^e2 3^{e3+e3'} 5^e5 7^e7
    // nontrivial ideal class iff e2 + e3 + e3' + e7 is odd (P5 is principal)
    bool principal() const { return (e[P2] + e[P3] + e[P3c] + e[P7]) % 2 == 0; }
    // smallest d >= 1 with d * ideal integral
    Integer min_denominator() const;
};

// valuation of an integral element at one of the named primes; x != 0
long quad_valuation(const QuadElem& x, QuadPrime P);

// Generator search for a principal ideal given by its exponent vector:
// scans s = 0, 1, 2, ... up to `s_bound` against the norm equation
// |r^2 - 70 s^2| = d^2 |N(ideal)| and checks valuations at the five primes.
// Throws std::runtime_error("generator not found within bound") on exhaustion.
QuadElem ideal_generator(const IdealSpec& spec, const Integer& s_bound = Integer(100000));

}  // namespace trisum

#endif
