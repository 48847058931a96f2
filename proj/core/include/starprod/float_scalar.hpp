#pragma once

#include <charconv>
#include <cmath>
#include <string>
#include <string_view>
#include <system_error>

#include "starprod/errors.hpp"

namespace starprod {

/// Double-precision scalar backend. Equality is tolerance-based:
/// |a - b| <= 1e-12 * max(1, |a|, |b|). Every value is finite; operations
/// that would overflow throw RangeError.
class FloatScalar {
public:
    static constexpr double kTol = 1e-12;

    FloatScalar() = default;
    FloatScalar(double v) : v_(checked(v)) {}

    static FloatScalar zero() { return FloatScalar(); }
    static FloatScalar one() { return FloatScalar(1.0); }
    static FloatScalar from_fraction(long long num, long long den) {
        if (den == 0) throw ZeroDenominator();
        return FloatScalar(static_cast<double>(num) / static_cast<double>(den));
    }

    static constexpr bool is_exact = false;
    static constexpr bool characteristic_two = false;

    double value() const { return v_; }
    bool is_zero() const { return std::abs(v_) <= kTol; }
    bool is_positive() const { return v_ > 0.0; }

    friend FloatScalar operator+(FloatScalar a, FloatScalar b) { return FloatScalar(a.v_ + b.v_); }
    friend FloatScalar operator-(FloatScalar a, FloatScalar b) { return FloatScalar(a.v_ - b.v_); }
    friend FloatScalar operator*(FloatScalar a, FloatScalar b) { return FloatScalar(a.v_ * b.v_); }
    FloatScalar operator-() const { return FloatScalar(-v_); }

    FloatScalar inverse() const {
        if (v_ == 0.0) throw DivisionByZero();
        return FloatScalar(1.0 / v_);
    }
    friend FloatScalar operator/(FloatScalar a, FloatScalar b) { return a * b.inverse(); }

    friend bool operator==(FloatScalar a, FloatScalar b) {
        double scale = std::max({1.0, std::abs(a.v_), std::abs(b.v_)});
        return std::abs(a.v_ - b.v_) <= kTol * scale;
    }
    friend bool operator!=(FloatScalar a, FloatScalar b) { return !(a == b); }
    friend bool operator<(FloatScalar a, FloatScalar b) { return a.v_ < b.v_; }

    /// Shortest text that round-trips through parse().
    std::string str() const {
        char buf[32];
        auto res = std::to_chars(buf, buf + sizeof(buf), v_);
        return std::string(buf, res.ptr);
    }

    /// Accepts decimal literals and "a/b" fractions.
    static FloatScalar parse(std::string_view text) {
        if (auto slash = text.find('/'); slash != std::string_view::npos) {
            FloatScalar num = parse(text.substr(0, slash));
            FloatScalar den = parse(text.substr(slash + 1));
            if (den.v_ == 0.0) throw ZeroDenominator();
            return FloatScalar(num.v_ / den.v_);
        }
        double v = 0.0;
        auto res = std::from_chars(text.data(), text.data() + text.size(), v);
        if (res.ec != std::errc() || res.ptr != text.data() + text.size())
            throw ParseError(static_cast<std::size_t>(res.ptr - text.data()), "decimal literal");
        return FloatScalar(v);
    }

private:
    static double checked(double v) {
        if (!std::isfinite(v)) throw RangeError("non-finite float value");
        return v;
    }
    double v_ = 0.0;
};

}  // namespace starprod
