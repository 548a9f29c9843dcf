#ifndef TRISUM_MATRIX_HPP
#define TRISUM_MATRIX_HPP

#include "trisum/poly.hpp"
#include <vector>

namespace trisum {

// Dense matrix over Q, row-major.
class MatQ {
public:
    MatQ() = default;
    MatQ(long rows, long cols) : r_(rows), c_(cols), a_(rows * cols, Rational(0)) {}
    static MatQ identity(long n);

    long rows() const { return r_; }
    long cols() const { return c_; }
    Rational& at(long i, long j) { return a_[i * c_ + j]; }
    const Rational& at(long i, long j) const { return a_[i * c_ + j]; }

    MatQ operator*(const MatQ& o) const;
    MatQ operator+(const MatQ& o) const;
    MatQ operator-(const MatQ& o) const;
    bool operator==(const MatQ& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool is_zero() const;

    // exact determinant by fraction-free (Bareiss) elimination on the
    // denominator-cleared integer matrix
    Rational det_bareiss() const;

    // reduced row echelon form in place; returns pivot column list
    std::vector<long> rref();
    long rank() const;
    // basis of the right kernel, as columns of a cols x k matrix
    MatQ kernel() const;

    // solve self * X = B exactly; self must have full column rank and
    // the system must be consistent
    MatQ solve_exact(const MatQ& B) const;

private:
    long r_ = 0, c_ = 0;
    std::vector<Rational> a_;
};

}  // namespace trisum

#endif
