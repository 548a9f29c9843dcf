#include "trisum/matrix.hpp"
#include <stdexcept>

namespace trisum {

MatQ MatQ::identity(long n) {
    MatQ m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatQ MatQ::operator*(const MatQ& o) const {
    if (c_ != o.r_) throw std::invalid_argument("dimension mismatch");
    MatQ m(r_, o.c_);
    for (long i = 0; i < r_; ++i)
        for (long k = 0; k < c_; ++k) {
            const Rational& x = at(i, k);
            if (x == 0) continue;
            for (long j = 0; j < o.c_; ++j) {
                if (o.at(k, j) == 0) continue;
                m.at(i, j) += x * o.at(k, j);
            }
        }
    return m;
}

MatQ MatQ::operator+(const MatQ& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("dimension mismatch");
    MatQ m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
    return m;
}

MatQ MatQ::operator-(const MatQ& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("dimension mismatch");
    MatQ m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
    return m;
}

bool MatQ::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

Rational MatQ::det_bareiss() const {
    if (r_ != c_) throw std::invalid_argument("non-square matrix");
    long n = r_;
    if (n == 0) return Rational(1);
    Integer den(1);
    for (const auto& x : a_) den = ilcm(den, denom(x));
    std::vector<std::vector<Integer>> M(n, std::vector<Integer>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            const Rational& x = at(i, j);
            M[i][j] = numer(x) * divexact(den, denom(x));
        }
    Integer prev(1), sign(1);
    for (long k = 0; k < n - 1; ++k) {
        if (M[k][k] == 0) {
            long piv = -1;
            for (long i = k + 1; i < n; ++i)
                if (M[i][k] != 0) { piv = i; break; }
            if (piv < 0) return Rational(0);
            std::swap(M[k], M[piv]);
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i)
            for (long j = k + 1; j < n; ++j)
                M[i][j] = divexact(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev);
        prev = M[k][k];
    }
    Rational d(sign * M[n - 1][n - 1]);
    Rational scale(Integer(1), ipow(den, n));
    scale.canonicalize();
    return d * scale;
}

std::vector<long> MatQ::rref() {
    std::vector<long> pivots;
    long row = 0;
    for (long col = 0; col < c_ && row < r_; ++col) {
        long piv = -1;
        for (long i = row; i < r_; ++i)
            if (at(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (long j = 0; j < c_; ++j) std::swap(at(piv, j), at(row, j));
        Rational inv = Rational(1) / at(row, col);
        for (long j = col; j < c_; ++j) at(row, j) *= inv;
        for (long i = 0; i < r_; ++i) {
            if (i == row) continue;
            Rational f = at(i, col);
            if (f == 0) continue;
            for (long j = col; j < c_; ++j) at(i, j) -= f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

long MatQ::rank() const {
    MatQ m = *this;
    return static_cast<long>(m.rref().size());
}

MatQ MatQ::kernel() const {
    MatQ m = *this;
    std::vector<long> pivots = m.rref();
    std::vector<bool> is_pivot(c_, false);
    for (long p : pivots) is_pivot[p] = true;
    std::vector<long> free_cols;
    for (long j = 0; j < c_; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    MatQ K(c_, static_cast<long>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        long fc = free_cols[k];
        K.at(fc, k) = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            K.at(pivots[i], k) = -m.at(static_cast<long>(i), fc);
    }
    return K;
}

MatQ MatQ::solve_exact(const MatQ& B) const {
    if (B.rows() != r_) throw std::invalid_argument("dimension mismatch");
    MatQ aug(r_, c_ + B.cols());
    for (long i = 0; i < r_; ++i) {
        for (long j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
        for (long j = 0; j < B.cols(); ++j) aug.at(i, c_ + j) = B.at(i, j);
    }
    std::vector<long> pivots = aug.rref();
    // full column rank in the left block required
    for (size_t i = 0; i < pivots.size(); ++i)
        if (pivots[i] >= c_) throw std::domain_error("inconsistent linear system");
    if (static_cast<long>(pivots.size()) != c_)
        throw std::domain_error("matrix not of full column rank");
    MatQ X(c_, B.cols());
    for (long i = 0; i < c_; ++i)
        for (long j = 0; j < B.cols(); ++j) X.at(i, j) = aug.at(i, c_ + j);
    return X;
}

}  // namespace trisum
