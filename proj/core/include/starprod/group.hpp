#pragma once

#include "starprod/errors.hpp"
#include "starprod/matrix.hpp"

namespace starprod {

// The group G of star-invertible 2x2 matrices and its H x| N structure.
// All operations here reject dimensions other than 2.

namespace detail {
template <ScalarBackend S>
void require_2x2(const Matrix<S>& a) {
    if (a.dim() != 2) throw DimensionError("group operations require 2x2 matrices");
}
}  // namespace detail

/// A 2x2 matrix is star-invertible iff its diagonal part is invertible,
/// i.e. both diagonal entries are nonzero.
template <ScalarBackend S>
bool is_star_invertible(const Matrix<S>& a) {
    detail::require_2x2(a);
    return !a.at(0, 0).is_zero() && !a.at(1, 1).is_zero();
}

/// Inverse of the diagonal part, entrywise. Throws NotInvertible.
template <ScalarBackend S>
Matrix<S> diag_inverse(const Matrix<S>& a) {
    detail::require_2x2(a);
    if (!is_star_invertible(a)) throw NotInvertible();
    return Matrix<S>::diagonal(a.at(0, 0).inverse(), a.at(1, 1).inverse());
}

/// Two-sided star-inverse: A0^-1 - A0^-1 A1 A0^-1.
template <ScalarBackend S>
Matrix<S> star_inverse(const Matrix<S>& a) {
    Matrix<S> d = diag_inverse(a);
    return d - d * a.offdiag_part() * d;
}

/// For A with singular diagonal part (and A != 0), a nonzero B with
/// A * B = 0: swap the diagonal entries of A0 and subtract A1.
template <ScalarBackend S>
Matrix<S> zero_divisor_witness(const Matrix<S>& a) {
    detail::require_2x2(a);
    if (is_star_invertible(a))
        throw InvalidArgument("zero divisor witness requires a singular diagonal part");
    if (a.is_zero()) throw DegenerateInput("no canonical zero divisor for the zero matrix");
    Matrix<S> b0 = Matrix<S>::diagonal(a.at(1, 1), a.at(0, 0));
    return b0 - a.offdiag_part();
}

/// The unique factorization A = h * n with h diagonal (in H) and n
/// unit-diagonal (in N): h = A0, n = 1 + A0^-1 A1.
template <ScalarBackend S>
struct HNFactorization {
    Matrix<S> h;
    Matrix<S> nPart;
};

template <ScalarBackend S>
HNFactorization<S> hn_decompose(const Matrix<S>& a) {
    Matrix<S> d = diag_inverse(a);
    return {a.diag_part(), Matrix<S>::identity(2) + d * a.offdiag_part()};
}

/// Conjugation of N by H: returns B~ = 1 + A0 B1 A0^-1 with
/// A0 * B = B~ * A0. Witnesses that N is normal in G.
template <ScalarBackend S>
Matrix<S> conjugate_n_part(const Matrix<S>& a0, const Matrix<S>& b) {
    detail::require_2x2(a0);
    detail::require_2x2(b);
    if (!a0.is_diagonal() || !is_star_invertible(a0))
        throw InvalidArgument("conjugation requires an invertible diagonal matrix");
    if (!b.is_unit_diagonal()) throw InvalidArgument("conjugation requires a unit-diagonal matrix");
    return Matrix<S>::identity(2) + a0 * b.offdiag_part() * diag_inverse(a0);
}

/// k-fold star power by binary exponentiation; k = 0 gives the identity,
/// negative k goes through star_inverse.
template <ScalarBackend S>
Matrix<S> star_power(const Matrix<S>& a, long long k) {
    detail::require_2x2(a);
    Matrix<S> base = a;
    if (k < 0) {
        base = star_inverse(a);
        k = -k;
    }
    Matrix<S> acc = Matrix<S>::identity(2);
    while (k > 0) {
        if (k & 1) acc = star(acc, base);
        base = star(base, base);
        k >>= 1;
    }
    return acc;
}

}  // namespace starprod
