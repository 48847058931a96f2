#pragma once

#include <cmath>

#include "starprod/errors.hpp"
#include "starprod/float_scalar.hpp"
#include "starprod/group.hpp"
#include "starprod/matrix.hpp"

namespace starprod {

/// Vector in the hyperbolic plane E = F x F.
template <ScalarBackend S>
struct Vec2 {
    S e1 = S::zero();
    S e2 = S::zero();

    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.e1 + b.e1, a.e2 + b.e2}; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.e1 - b.e1, a.e2 - b.e2}; }
    Vec2 operator-() const { return {-e1, -e2}; }
    friend bool operator==(const Vec2& a, const Vec2& b) { return a.e1 == b.e1 && a.e2 == b.e2; }
    friend bool operator!=(const Vec2& a, const Vec2& b) { return !(a == b); }
};

/// The bilinear form b(u, v) = u1 v1 - u2 v2.
template <ScalarBackend S>
S minkowski_form(const Vec2<S>& u, const Vec2<S>& v) {
    return u.e1 * v.e1 - u.e2 * v.e2;
}

namespace detail {

template <ScalarBackend S>
bool rotation_invariant_holds(const S& c, const S& s) {
    return c * c - s * s == S::one();
}

// c^2 and s^2 can be huge while their difference is 1; scale the
// tolerance by the squares, not the difference.
inline bool rotation_invariant_holds(const FloatScalar& c, const FloatScalar& s) {
    double cc = c.value() * c.value();
    double ss = s.value() * s.value();
    return std::abs(cc - ss - 1.0) <= FloatScalar::kTol * std::max({1.0, cc, ss});
}

// Tag for constructing a rotation whose invariant is guaranteed by the
// caller (e.g. composition of two valid rotations). On the float backend
// re-validating would reject legitimate results: composing large rotations
// cancels, and the roundoff left behind exceeds any tolerance expressible
// in terms of the resulting (c, s) alone.
struct trusted_t {};

}  // namespace detail

/// Element of SO(1,1), the matrix [[c,s],[s,c]] with c^2 - s^2 = 1,
/// stored as the pair (c, s). Constructors enforce the invariant.
template <ScalarBackend S>
class HypRotation {
public:
    HypRotation() : c_(S::one()), s_(S::zero()) {}
    HypRotation(S c, S s) : c_(std::move(c)), s_(std::move(s)) {
        if (!detail::rotation_invariant_holds(c_, s_))
            throw InvalidArgument("hyperbolic rotation requires c^2 - s^2 = 1");
    }
    HypRotation(S c, S s, detail::trusted_t) : c_(std::move(c)), s_(std::move(s)) {}

    static HypRotation identity() { return HypRotation(); }

    const S& c() const { return c_; }
    const S& s() const { return s_; }

    Matrix<S> to_matrix() const {
        Matrix<S> m(2);
        m.at(0, 0) = c_;
        m.at(0, 1) = s_;
        m.at(1, 0) = s_;
        m.at(1, 1) = c_;
        return m;
    }

    friend bool operator==(const HypRotation& a, const HypRotation& b) {
        return a.c_ == b.c_ && a.s_ == b.s_;
    }
    friend bool operator!=(const HypRotation& a, const HypRotation& b) { return !(a == b); }

private:
    S c_, s_;
};

template <ScalarBackend S>
HypRotation<S> rot_compose(const HypRotation<S>& r, const HypRotation<S>& s) {
    return HypRotation<S>(r.c() * s.c() + r.s() * s.s(), r.c() * s.s() + r.s() * s.c(),
                          detail::trusted_t{});
}

template <ScalarBackend S>
Vec2<S> rot_apply(const HypRotation<S>& r, const Vec2<S>& u) {
    return {r.c() * u.e1 + r.s() * u.e2, r.s() * u.e1 + r.c() * u.e2};
}

template <ScalarBackend S>
HypRotation<S> rot_inverse(const HypRotation<S>& r) {
    return HypRotation<S>(r.c(), -r.s(), detail::trusted_t{});
}

/// The isomorphism F^x -> SO(1,1): x maps to ((x + 1/x)/2, (x - 1/x)/2).
template <ScalarBackend S>
HypRotation<S> psi(const S& x) {
    if (x.is_zero()) throw DivisionByZero();
    S half = S::from_fraction(1, 2);
    S xi = x.inverse();
    return HypRotation<S>(half * (x + xi), half * (x - xi));
}

/// Inverse of psi: c + s. Two-sided inverse since (c+s)(c-s) = 1.
template <ScalarBackend S>
S psi_inv(const HypRotation<S>& r) {
    return r.c() + r.s();
}

/// The one-parameter subgroup SO+(1,1) over the reals: (cosh t, sinh t).
/// Equals psi(e^t). |t| <= 700 keeps cosh finite in double precision.
inline HypRotation<FloatScalar> phi_real(double t) {
    if (!(std::abs(t) <= 700.0)) throw RangeError("phi_real: |t| must be <= 700");
    return HypRotation<FloatScalar>(FloatScalar(std::cosh(t)), FloatScalar(std::sinh(t)));
}

/// Membership in SO+(1,1), the index-2 subgroup with c > 0.
template <ScalarBackend S>
bool is_positive_component(const HypRotation<S>& r) {
    return r.c().is_positive();
}

/// Element of ISO(1,1): x maps to R x + u.
template <ScalarBackend S>
struct Motion {
    HypRotation<S> rot;
    Vec2<S> trans;

    static Motion identity() { return {HypRotation<S>::identity(), Vec2<S>{}}; }

    friend bool operator==(const Motion& a, const Motion& b) {
        return a.rot == b.rot && a.trans == b.trans;
    }
    friend bool operator!=(const Motion& a, const Motion& b) { return !(a == b); }
};

/// Group law T_[R,u] * T_[S,v] = T_[RS, u + Rv].
template <ScalarBackend S>
Motion<S> motion_compose(const Motion<S>& t1, const Motion<S>& t2) {
    return {rot_compose(t1.rot, t2.rot), t1.trans + rot_apply(t1.rot, t2.trans)};
}

template <ScalarBackend S>
Vec2<S> motion_apply(const Motion<S>& t, const Vec2<S>& x) {
    return rot_apply(t.rot, x) + t.trans;
}

template <ScalarBackend S>
Motion<S> motion_inverse(const Motion<S>& t) {
    HypRotation<S> ri = rot_inverse(t.rot);
    return {ri, -rot_apply(ri, t.trans)};
}

/// alpha: H -> SO(1,1), diag(x, y) to psi(x/y). Kernel {s * 1}.
template <ScalarBackend S>
HypRotation<S> alpha(const Matrix<S>& a0) {
    detail::require_2x2(a0);
    if (!a0.is_diagonal()) throw InvalidArgument("alpha requires a diagonal matrix");
    if (!is_star_invertible(a0)) throw NotInvertible();
    return psi(a0.at(0, 0) * a0.at(1, 1).inverse());
}

/// A section of alpha: diag(c + s, 1), the simplest preimage.
template <ScalarBackend S>
Matrix<S> alpha_preimage(const HypRotation<S>& r) {
    return Matrix<S>::diagonal(psi_inv(r), S::one());
}

/// beta: N -> E, [[1,p],[q,1]] to (p + q, p - q). A group isomorphism.
template <ScalarBackend S>
Vec2<S> beta(const Matrix<S>& b) {
    detail::require_2x2(b);
    if (!b.is_unit_diagonal()) throw InvalidArgument("beta requires a unit-diagonal matrix");
    const S& p = b.at(0, 1);
    const S& q = b.at(1, 0);
    return {p + q, p - q};
}

template <ScalarBackend S>
Matrix<S> beta_inv(const Vec2<S>& v) {
    S half = S::from_fraction(1, 2);
    Matrix<S> m = Matrix<S>::identity(2);
    m.at(0, 1) = half * (v.e1 + v.e2);
    m.at(1, 0) = half * (v.e1 - v.e2);
    return m;
}

/// gamma: H -> F^x, diag(x, y) to x.
template <ScalarBackend S>
S gamma(const Matrix<S>& a0) {
    detail::require_2x2(a0);
    if (!a0.is_diagonal()) throw InvalidArgument("gamma requires a diagonal matrix");
    return a0.at(0, 0);
}

/// The homomorphism Phi: G -> ISO(1,1),
/// Phi(A) = T_[alpha(A0), beta(1 + A1 A0^-1)]. Kernel {s * 1}.
template <ScalarBackend S>
Motion<S> phi_map(const Matrix<S>& a) {
    Matrix<S> d = diag_inverse(a);  // throws NotInvertible when needed
    Matrix<S> n = Matrix<S>::identity(2) + a.offdiag_part() * d;
    return {alpha(a.diag_part()), beta(n)};
}

/// Affine 3x3 embedding of a motion: [[c,s,u1],[s,c,u2],[0,0,1]].
/// Multiplicative for the ordinary 3x3 product.
template <ScalarBackend S>
Matrix<S> embed_affine(const Motion<S>& t) {
    Matrix<S> m = Matrix<S>::identity(3);
    m.at(0, 0) = t.rot.c();
    m.at(0, 1) = t.rot.s();
    m.at(1, 0) = t.rot.s();
    m.at(1, 1) = t.rot.c();
    m.at(0, 2) = t.trans.e1;
    m.at(1, 2) = t.trans.e2;
    return m;
}

/// The faithful 3-dimensional representation
/// rho(A) = gamma(A0) * embed_affine(Phi(A)).
template <ScalarBackend S>
Matrix<S> rho(const Matrix<S>& a) {
    return gamma(a.diag_part()) * embed_affine(phi_map(a));
}

/// The literal raw-entry reading of the representation formula: for
/// A = [[x,p],[q,y]] with p, q taken as raw matrix entries,
/// x * [[c,s,zp + q/z],[s,c,zp - q/z],[0,0,1]] with z = x/y. This map is
/// NOT multiplicative; it exists only to produce the counterexample
/// witness. The faithful representation is rho() above.
template <ScalarBackend S>
Matrix<S> rho_raw_reading(const Matrix<S>& a) {
    detail::require_2x2(a);
    if (!is_star_invertible(a)) throw NotInvertible();
    const S& x = a.at(0, 0);
    const S& y = a.at(1, 1);
    const S& p = a.at(0, 1);
    const S& q = a.at(1, 0);
    S z = x * y.inverse();
    S zi = z.inverse();
    S half = S::from_fraction(1, 2);
    S c = half * (z + zi);
    S s = half * (z - zi);
    Matrix<S> m = Matrix<S>::identity(3);
    m.at(0, 0) = c;
    m.at(0, 1) = s;
    m.at(1, 0) = s;
    m.at(1, 1) = c;
    m.at(0, 2) = z * p + zi * q;
    m.at(1, 2) = z * p - zi * q;
    return x * m;
}

}  // namespace starprod
