#ifndef TRISUM_POLY_HPP
#define TRISUM_POLY_HPP

#include "trisum/integer.hpp"
#include <vector>
#include <string>

namespace trisum {

// Dense univariate polynomial over Z, coefficients ascending.
// Invariant: leading stored coefficient is nonzero (zero poly = empty vector).
class PolyZ {
public:
    PolyZ() = default;
    explicit PolyZ(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }
    PolyZ(std::initializer_list<Integer> coeffs) : c_(coeffs) { trim(); }
    static PolyZ constant(const Integer& a) { return PolyZ({a}); }
    static PolyZ x() { return PolyZ({Integer(0), Integer(1)}); }
    // (c0, c1, ..., cn) from comma-separated ascending list
    static PolyZ parse(const std::string& csv);

    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const Integer& operator[](size_t i) const;
    const std::vector<Integer>& coeffs() const { return c_; }
    const Integer& leading() const;

    PolyZ operator+(const PolyZ& o) const;
    PolyZ operator-(const PolyZ& o) const;
    PolyZ operator*(const PolyZ& o) const;
    PolyZ operator*(const Integer& k) const;
    PolyZ operator-() const;
    bool operator==(const PolyZ& o) const { return c_ == o.c_; }

    Integer eval(const Integer& x) const;
    Integer eval_mod(const Integer& x, const Integer& m) const;
    PolyZ derivative() const;
    PolyZ pow(unsigned long e) const;
    Integer content() const;          // gcd of coefficients, >= 0 (0 for zero poly)
    PolyZ primitive_part() const;

    // exact division; throws std::domain_error if remainder nonzero
    PolyZ divexact(const PolyZ& d) const;
    // true division assuming divisor monic
    static void divmod_monic(const PolyZ& a, const PolyZ& d, PolyZ& q, PolyZ& r);

    std::string str(const std::string& var = "t") const;
    std::string csv() const;  // ascending comma-separated

private:
    std::vector<Integer> c_;
    void trim();
};

// gcd in Z[t], primitive with positive leading coefficient
PolyZ poly_gcd(const PolyZ& a, const PolyZ& b);

// Res(p, q) by the subresultant PRS; inputs nonzero.
Integer resultant(const PolyZ& p, const PolyZ& q);

// Sylvester-determinant resultant (test oracle; use only at small degree).
Integer resultant_sylvester(const PolyZ& p, const PolyZ& q);

// disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f)
Integer poly_discriminant(const PolyZ& f);

// Dense univariate polynomial over Q.
class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    PolyQ(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
    static PolyQ constant(const Rational& a) { return PolyQ({a}); }
    static PolyQ x() { return PolyQ({Rational(0), Rational(1)}); }
    static PolyQ from(const PolyZ& p);

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rational& operator[](size_t i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    PolyQ operator+(const PolyQ& o) const;
    PolyQ operator-(const PolyQ& o) const;
    PolyQ operator*(const PolyQ& o) const;
    PolyQ operator*(const Rational& k) const;
    PolyQ operator-() const;
    bool operator==(const PolyQ& o) const { return c_ == o.c_; }

    Rational eval(const Rational& x) const;
    PolyQ derivative() const;
    PolyQ pow(unsigned long e) const;
    // substitute x -> g(x)
    PolyQ compose(const PolyQ& g) const;

    bool is_integral() const;
    PolyZ to_polyz() const;  // throws if a denominator is != 1
    // f = (1/den) * num with num primitive-scaled integer poly
    void clear_denominators(PolyZ& num, Integer& den) const;

    std::string str(const std::string& var = "x") const;

private:
    std::vector<Rational> c_;
    void trim();
};

}  // namespace trisum

#endif
