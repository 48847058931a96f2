#pragma once

#include <concepts>
#include <string>

namespace starprod {

/// The field backend contract all matrix algebra is generic over.
/// Shipped backends: Rational (exact) and FloatScalar (tolerance-based).
/// Characteristic-2 fields are rejected statically.
template <class S>
concept ScalarBackend = requires(const S a, const S b) {
    { S::zero() } -> std::same_as<S>;
    { S::one() } -> std::same_as<S>;
    { S::from_fraction(1LL, 2LL) } -> std::same_as<S>;
    { a + b } -> std::same_as<S>;
    { a - b } -> std::same_as<S>;
    { a * b } -> std::same_as<S>;
    { -a } -> std::same_as<S>;
    { a.inverse() } -> std::same_as<S>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.is_positive() } -> std::same_as<bool>;
    { a == b } -> std::convertible_to<bool>;
    { a.str() } -> std::same_as<std::string>;
    requires !S::characteristic_two;
    { S::is_exact } -> std::convertible_to<bool>;
};

}  // namespace starprod
