#ifndef TRISUM_DESCENT_HPP
#define TRISUM_DESCENT_HPP

#include "trisum/bipoly.hpp"
#include "trisum/quadfield.hpp"
#include "trisum/weierstrass.hpp"
#include <vector>

namespace trisum {

// The pair of homogeneous quintics from expanding
// (1/d)(r + s sqrt70) eps^c (u + v sqrt70)^5 = A(u,v) + B(u,v) sqrt70:
// f = d*A must equal d(3 alpha^8 z1^10 + 10) and g = d*B must equal d.
struct QuinticSystem {
    long alpha = 1;
    long c = 0;
    Integer d = 1;
    QuadElem generator;  // of the fractional ideal a*q^-5
    BiPolyQ f, g;        // integer coefficients
};

QuinticSystem build_system(long alpha, long c);

// true iff the system is soluble mod every modulus in the list
// (existence of (u, v, z1) with g = d and f = d(3 alpha^8 z1^10 + 10))
bool local_sieve_system(const QuinticSystem& sys, const std::vector<long>& moduli);

// the moduli 2^6, 3^3, 5^3, 7^3 and all primes 11 <= q < 100
std::vector<long> default_sieve_moduli();

// survivors of the local sieve over the full (alpha, c) grid
std::vector<std::pair<long, long>> sieve_alpha_c_grid(const std::vector<long>& moduli,
                                                      unsigned jobs = 1);

// All integer solutions of g(u, v) = rhs with max(|u|,|v|) <= bound,
// by enumeration with modular prefilters. A bounded verification, not a
// completeness proof.
std::vector<std::pair<Integer, Integer>> thue_search(const BiPolyQ& g, const Integer& rhs,
                                                     const Integer& bound);

// all integral points (X, Y) with |X| <= bound, by completed-square solving per X
std::vector<std::pair<Integer, Integer>> bounded_integral_points(const WeierstrassModel& E,
                                                                 const Integer& bound);

// the curves behind the p = 2 and p = 3 reductions
WeierstrassModel small_exp_curve_p2(long alpha);  // Y^2 = X(X^2 + 20aX + 30a^2)
WeierstrassModel small_exp_curve_p3(long alpha);  // Y^2 = X^3 + 630 a^2

// Invert the point substitutions back to candidate x values.
// p = 2: X = 3 a x^2, Y = 3 a x z2; p = 3: X = 3 a z2, Y = 3 a (3x^2 + 10).
// Keeps only integer-consistent candidates that satisfy the defining split.
std::vector<Integer> points_to_x(const std::vector<std::pair<Integer, Integer>>& pts, long alpha,
                                 long p);

}  // namespace trisum

#endif
