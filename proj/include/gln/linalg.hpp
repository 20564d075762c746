#pragma once

// Small dense matrices over an exact field.

#include "gln/scalar.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace gln {

template <Field F>
class Matrix {
public:
    Matrix() = default;
    Matrix(int r, int c) : r_(r), c_(c), a_((size_t)r * c, F(0)) {}
    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    F& operator()(int i, int j) { return a_[(size_t)i * c_ + j]; }
    const F& operator()(int i, int j) const { return a_[(size_t)i * c_ + j]; }

    Matrix operator*(const Matrix& o) const {
        if (c_ != o.r_) throw std::invalid_argument("matrix shape mismatch");
        Matrix m(r_, o.c_);
        for (int i = 0; i < r_; ++i)
            for (int k = 0; k < c_; ++k) {
                const F& x = (*this)(i, k);
                if (x.is_zero()) continue;
                for (int j = 0; j < o.c_; ++j) m(i, j) += x * o(k, j);
            }
        return m;
    }

    Matrix transpose() const {
        Matrix m(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }

    // Gauss-Jordan; throws if singular
    Matrix inverse() const {
        if (r_ != c_) throw std::invalid_argument("inverse of non-square matrix");
        int n = r_;
        Matrix A = *this, B = identity(n);
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            for (int r = col; r < n; ++r)
                if (!A(r, col).is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) throw std::domain_error("singular matrix");
            if (piv != col)
                for (int j = 0; j < n; ++j) {
                    std::swap(A(piv, j), A(col, j));
                    std::swap(B(piv, j), B(col, j));
                }
            F iv = A(col, col).inv();
            for (int j = 0; j < n; ++j) {
                A(col, j) *= iv;
                B(col, j) *= iv;
            }
            for (int r = 0; r < n; ++r) {
                if (r == col || A(r, col).is_zero()) continue;
                F f = A(r, col);
                for (int j = 0; j < n; ++j) {
                    A(r, j) -= f * A(col, j);
                    B(r, j) -= f * B(col, j);
                }
            }
        }
        return B;
    }

    int rank() const {
        Matrix A = *this;
        int rk = 0;
        for (int col = 0; col < c_ && rk < r_; ++col) {
            int piv = -1;
            for (int r = rk; r < r_; ++r)
                if (!A(r, col).is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) continue;
            for (int j = 0; j < c_; ++j) std::swap(A(piv, j), A(rk, j));
            F iv = A(rk, col).inv();
            for (int r = rk + 1; r < r_; ++r) {
                if (A(r, col).is_zero()) continue;
                F f = A(r, col) * iv;
                for (int j = col; j < c_; ++j) A(r, j) -= f * A(rk, j);
            }
            ++rk;
        }
        return rk;
    }

    bool is_identity() const { return r_ == c_ && *this == identity(r_); }

private:
    int r_ = 0, c_ = 0;
    std::vector<F> a_;
};

}  // namespace gln
