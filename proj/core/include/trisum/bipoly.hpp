#ifndef TRISUM_BIPOLY_HPP
#define TRISUM_BIPOLY_HPP

#include "trisum/poly.hpp"
#include <map>
#include <utility>

namespace trisum {

// Sparse bivariate polynomial over Q in (u, v); canonical form holds no zeros.
class BiPolyQ {
public:
    using Key = std::pair<long, long>;  // (i, j) for u^i v^j

    BiPolyQ() = default;
    static BiPolyQ monomial(long i, long j, const Rational& c);
    static BiPolyQ u() { return monomial(1, 0, 1); }
    static BiPolyQ v() { return monomial(0, 1, 1); }
    static BiPolyQ constant(const Rational& c) { return monomial(0, 0, c); }
    // homogeneous binary form of degree n from coefficients a0 u^n + a1 u^{n-1} v + ... + an v^n
    static BiPolyQ binary_form(const std::vector<Integer>& a);

    const std::map<Key, Rational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    long total_degree() const;
    bool is_homogeneous(long* deg = nullptr) const;
    bool is_integral() const;

    BiPolyQ operator+(const BiPolyQ& o) const;
    BiPolyQ operator-(const BiPolyQ& o) const;
    BiPolyQ operator*(const BiPolyQ& o) const;
    BiPolyQ operator*(const Rational& k) const;
    BiPolyQ operator-() const { return *this * Rational(-1); }
    bool operator==(const BiPolyQ& o) const { return t_ == o.t_; }
    BiPolyQ pow(unsigned long e) const;

    BiPolyQ du() const;  // d/du
    BiPolyQ dv() const;  // d/dv

    Rational eval(const Rational& uu, const Rational& vv) const;
    // substitute u -> g(x), v -> h(x)
    PolyQ substitute(const PolyQ& g, const PolyQ& h) const;

    std::string str() const;

private:
    std::map<Key, Rational> t_;
    void add_term(long i, long j, const Rational& c);
};

// discriminant of a homogeneous binary cubic a u^3 + b u^2 v + c u v^2 + d v^3:
// 18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2. Input must be cubic, homogeneous,
// integer coefficients.
Integer binary_form_disc(const BiPolyQ& F);

}  // namespace trisum

#endif
