#pragma once

#include "ssatc/bigint.hpp"

#include <compare>
#include <string>
#include <string_view>

namespace ssatc {

/// Exact rational number, always in lowest terms with positive denominator.
/// All probabilities in the solver are carried as Rationals end to end.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d);
    Rational(BigInt n, BigInt d);

    /// Accepts "a/b", plain integers, and decimal literals like "0.45"
    /// (converted exactly, 0.45 -> 9/20).
    static Rational from_string(std::string_view s);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    int signum() const { return num_.signum(); }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }

    Rational one_minus() const; // 1 - x

    bool operator==(const Rational& b) const = default;
    std::strong_ordering operator<=>(const Rational& b) const;

    static const Rational& zero();
    static const Rational& one();

    /// "a/b", or just "a" for integral values.
    std::string to_string() const;

    /// Decimal expansion with up to max_sig significant digits. Exact
    /// (trailing zeros trimmed) when the expansion terminates within the
    /// budget, otherwise rounded half-up at the last kept digit.
    std::string to_decimal(size_t max_sig = 20) const;

    double to_double() const { return num_.to_double() / den_.to_double(); }
    size_t hash() const { return num_.hash() * 131 + den_.hash(); }

private:
    BigInt num_;
    BigInt den_;

    void normalize();
};

} // namespace ssatc
