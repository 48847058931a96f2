#pragma once

#include <cstdint>

#include "starprod/matrix.hpp"

namespace starprod {

/// SplitMix64: a fixed, documented, cross-platform generator so that
/// counterexamples reproduce anywhere from (seed, trial index).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

// Property trials draw entries from {-2, -1, 0, 1/2, 1, 2}: small enough
// to keep rationals compact, with one non-integer to exercise reduction.
inline constexpr int kSampleNum[6] = {-2, -1, 0, 1, 1, 2};
inline constexpr int kSampleDen[6] = {1, 1, 1, 2, 1, 1};

template <ScalarBackend S>
S sample_scalar(SplitMix64& rng) {
    auto i = rng.below(6);
    return S::from_fraction(kSampleNum[i], kSampleDen[i]);
}

template <ScalarBackend S>
S sample_nonzero_scalar(SplitMix64& rng) {
    for (;;) {
        S s = sample_scalar<S>(rng);
        if (!s.is_zero()) return s;
    }
}

template <ScalarBackend S>
Matrix<S> sample_matrix(SplitMix64& rng, std::size_t n) {
    Matrix<S> m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = sample_scalar<S>(rng);
    return m;
}

/// Random 2x2 star-invertible matrix: diagonal entries resampled until
/// nonzero.
template <ScalarBackend S>
Matrix<S> sample_invertible(SplitMix64& rng) {
    Matrix<S> m = sample_matrix<S>(rng, 2);
    m.at(0, 0) = sample_nonzero_scalar<S>(rng);
    m.at(1, 1) = sample_nonzero_scalar<S>(rng);
    return m;
}

/// Random nonzero 2x2 matrix with singular diagonal part.
template <ScalarBackend S>
Matrix<S> sample_singular_nonzero(SplitMix64& rng) {
    for (;;) {
        Matrix<S> m = sample_matrix<S>(rng, 2);
        auto which = rng.below(3);
        if (which != 1) m.at(0, 0) = S::zero();
        if (which != 0) m.at(1, 1) = S::zero();
        if (!m.is_zero()) return m;
    }
}

template <ScalarBackend S>
Matrix<S> sample_unit_diagonal(SplitMix64& rng) {
    Matrix<S> m = Matrix<S>::identity(2);
    m.at(0, 1) = sample_scalar<S>(rng);
    m.at(1, 0) = sample_scalar<S>(rng);
    return m;
}

template <ScalarBackend S>
Matrix<S> sample_diagonal_invertible(SplitMix64& rng) {
    return Matrix<S>::diagonal(sample_nonzero_scalar<S>(rng), sample_nonzero_scalar<S>(rng));
}

}  // namespace starprod
