#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <string_view>

#include "starprod/errors.hpp"

namespace starprod {

/// Exact rational scalar over arbitrary-precision integers.
///
/// Always stored canonically: denominator positive, numerator and
/// denominator coprime, zero as 0/1. The sign lives in the numerator.
class Rational {
public:
    using Int = boost::multiprecision::cpp_int;

    Rational() = default;
    Rational(long long n) : v_(n) {}

    /// num/den, canonicalized. Throws ZeroDenominator if den == 0.
    Rational(Int num, Int den) {
        if (den == 0) throw ZeroDenominator();
        if (den < 0) {
            num = -num;
            den = -den;
        }
        v_ = boost::multiprecision::cpp_rational(std::move(num), std::move(den));
    }
    Rational(long long num, long long den) : Rational(Int(num), Int(den)) {}

    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }
    static Rational from_fraction(long long num, long long den) { return Rational(num, den); }

    /// Exact arithmetic; results stay canonical.
    static constexpr bool is_exact = true;
    /// 1 + 1 != 0 holds in the rationals.
    static constexpr bool characteristic_two = false;

    Int numerator() const { return boost::multiprecision::numerator(v_); }
    Int denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_positive() const { return v_ > 0; }
    bool is_integer() const { return denominator() == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
    Rational operator-() const { return Rational(-v_); }

    Rational inverse() const {
        if (is_zero()) throw DivisionByZero();
        return Rational(1 / v_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    /// "n" when the denominator is 1, otherwise "n/d".
    std::string str() const {
        std::string s = numerator().str();
        if (denominator() != 1) s += "/" + denominator().str();
        return s;
    }

    /// Parses "[-]digits[/digits]". The whole text must match.
    static Rational parse(std::string_view text);

    /// Integer value; throws InvalidArgument unless denominator is 1
    /// and the value fits a long long.
    long long to_integer() const {
        if (!is_integer()) throw InvalidArgument("not an integer: " + str());
        return static_cast<long long>(numerator());
    }

    double to_double() const { return static_cast<double>(v_); }

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
    boost::multiprecision::cpp_rational v_;
};

inline Rational Rational::parse(std::string_view text) {
    std::size_t pos = 0;
    auto digits = [&](const char* what) {
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start) throw ParseError(pos, what);
        return Int(std::string(text.substr(start, pos - start)));
    };
    bool neg = pos < text.size() && text[pos] == '-';
    if (neg) ++pos;
    Int num = digits("digits");
    Int den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = digits("denominator digits");
    }
    if (pos != text.size()) throw ParseError(pos, "end of input");
    if (neg) num = -num;
    return Rational(std::move(num), std::move(den));
}

}  // namespace starprod
