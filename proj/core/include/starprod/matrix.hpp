#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "starprod/errors.hpp"
#include "starprod/scalar.hpp"

namespace starprod {

/// Dense n x n matrix over a scalar backend, row-major.
template <ScalarBackend S>
class Matrix {
public:
    /// Zero matrix of dimension n (n >= 1).
    explicit Matrix(std::size_t n) : n_(checked_dim(n)), e_(n * n, S::zero()) {}

    /// Row-major construction from nested braces, e.g. {{1,2},{3,4}}.
    Matrix(std::initializer_list<std::initializer_list<S>> rows) : n_(checked_dim(rows.size())) {
        e_.reserve(n_ * n_);
        for (const auto& row : rows) {
            if (row.size() != n_) throw DimensionError("ragged matrix initializer");
            for (const auto& x : row) e_.push_back(x);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = S::one();
        return m;
    }

    static Matrix diagonal(const S& a, const S& b) {
        Matrix m(2);
        m.at(0, 0) = a;
        m.at(1, 1) = b;
        return m;
    }

    std::size_t dim() const { return n_; }

    S& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const S& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool is_diagonal() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (i != j && !at(i, j).is_zero()) return false;
        return true;
    }

    bool is_unit_diagonal() const {
        for (std::size_t i = 0; i < n_; ++i)
            if (!(at(i, i) == S::one())) return false;
        return true;
    }

    /// Diagonal part A0: same diagonal, zeros elsewhere.
    Matrix diag_part() const {
        Matrix m(n_);
        for (std::size_t i = 0; i < n_; ++i) m.at(i, i) = at(i, i);
        return m;
    }

    /// Off-diagonal part A1: zero diagonal, other entries kept.
    Matrix offdiag_part() const {
        Matrix m = *this;
        for (std::size_t i = 0; i < n_; ++i) m.at(i, i) = S::zero();
        return m;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        require_same_dim(a, b);
        Matrix r(a.n_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] + b.e_[k];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        require_same_dim(a, b);
        Matrix r(a.n_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] - b.e_[k];
        return r;
    }

    Matrix operator-() const {
        Matrix r(n_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
        return r;
    }

    friend Matrix operator*(const S& s, const Matrix& a) {
        Matrix r(a.n_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = s * a.e_[k];
        return r;
    }

    /// Ordinary (row by column) matrix product.
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        require_same_dim(a, b);
        Matrix r(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t k = 0; k < a.n_; ++k) {
                const S& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < a.n_; ++j)
                    r.at(i, j) = r.at(i, j) + aik * b.at(k, j);
            }
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.n_ != b.n_) return false;
        for (std::size_t k = 0; k < a.e_.size(); ++k)
            if (!(a.e_[k] == b.e_[k])) return false;
        return true;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    static std::size_t checked_dim(std::size_t n) {
        if (n < 1) throw DimensionError("matrix dimension must be >= 1");
        return n;
    }
    static void require_same_dim(const Matrix& a, const Matrix& b) {
        if (a.n_ != b.n_)
            throw DimensionError("dimension mismatch: " + std::to_string(a.n_) + " vs " +
                                 std::to_string(b.n_));
    }

    std::size_t n_;
    std::vector<S> e_;
};

/// The unique split A = diag + offdiag.
template <ScalarBackend S>
struct DiagSplit {
    Matrix<S> diag;
    Matrix<S> offdiag;
};

template <ScalarBackend S>
DiagSplit<S> diag_split(const Matrix<S>& a) {
    return {a.diag_part(), a.offdiag_part()};
}

/// The star product A * B = A0 B0 + (AB)1: diagonal entries multiply
/// entrywise, off-diagonal entries come from the ordinary product.
template <ScalarBackend S>
Matrix<S> star(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.dim() != b.dim()) throw DimensionError("star: dimension mismatch");
    Matrix<S> r = (a * b).offdiag_part();
    for (std::size_t i = 0; i < a.dim(); ++i) r.at(i, i) = a.at(i, i) * b.at(i, i);
    return r;
}

/// Closed form for n = 2: A0 B0 + A0 B1 + A1 B0. Cross-validates star().
template <ScalarBackend S>
Matrix<S> star2_closed(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.dim() != 2 || b.dim() != 2) throw DimensionError("star2_closed requires 2x2 matrices");
    Matrix<S> a0 = a.diag_part(), a1 = a.offdiag_part();
    Matrix<S> b0 = b.diag_part(), b1 = b.offdiag_part();
    return a0 * b0 + a0 * b1 + a1 * b0;
}

/// Entrywise (Hadamard) product.
template <ScalarBackend S>
Matrix<S> hadamard(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.dim() != b.dim()) throw DimensionError("hadamard: dimension mismatch");
    Matrix<S> r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) r.at(i, j) = a.at(i, j) * b.at(i, j);
    return r;
}

/// The standard witness that star is not associative for n >= 3:
/// the unit matrices E12, E23, E32 zero-padded to n x n, with both
/// bracketings evaluated. lhs != rhs always holds.
template <ScalarBackend S>
struct NonAssocWitness {
    Matrix<S> a, b, c;
    Matrix<S> lhs;  // (a * b) * c
    Matrix<S> rhs;  // a * (b * c)
};

template <ScalarBackend S>
NonAssocWitness<S> nonassoc_witness(std::size_t n) {
    if (n < 3) throw DimensionError("non-associativity witness requires n >= 3");
    Matrix<S> a(n), b(n), c(n);
    a.at(0, 1) = S::one();
    b.at(1, 2) = S::one();
    c.at(2, 1) = S::one();
    return {a, b, c, star(star(a, b), c), star(a, star(b, c))};
}

}  // namespace starprod
