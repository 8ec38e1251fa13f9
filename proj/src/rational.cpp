#include "ssatc/rational.hpp"

#include "ssatc/error.hpp"

#include <algorithm>
#include <cassert>

namespace ssatc {

Rational::Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

void Rational::normalize() {
    if (den_.is_zero()) throw Error(Errc::InvalidArgument, "zero denominator");
    if (den_.is_negative()) {
        den_ = -den_;
        num_ = -num_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error(Errc::InvalidArgument, "division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational Rational::one_minus() const { return Rational(den_ - num_, den_); }

std::strong_ordering Rational::operator<=>(const Rational& b) const {
    return (num_ * b.den_) <=> (b.num_ * den_);
}

const Rational& Rational::zero() {
    static const Rational z(0);
    return z;
}

const Rational& Rational::one() {
    static const Rational o(1);
    return o;
}

Rational Rational::from_string(std::string_view s) {
    if (s.empty()) throw Error(Errc::ParseError, "empty rational literal");
    size_t slash = s.find('/');
    if (slash != std::string_view::npos) {
        BigInt n = BigInt::from_string(s.substr(0, slash));
        BigInt d = BigInt::from_string(s.substr(slash + 1));
        return Rational(std::move(n), std::move(d));
    }
    size_t dot = s.find('.');
    if (dot == std::string_view::npos) {
        return Rational(BigInt::from_string(s), BigInt(1));
    }
    std::string digits(s.substr(0, dot));
    std::string_view frac = s.substr(dot + 1);
    if (frac.empty() && (digits.empty() || digits == "+" || digits == "-"))
        throw Error(Errc::ParseError, "bad decimal literal");
    digits.append(frac);
    if (digits.empty() || digits == "+" || digits == "-") digits += "0";
    BigInt n = BigInt::from_string(digits);
    return Rational(std::move(n), BigInt::pow10(static_cast<unsigned>(frac.size())));
}

std::string Rational::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

std::string Rational::to_decimal(size_t max_sig) const {
    if (num_.is_zero()) return "0";
    BigInt n = num_.abs();
    BigInt q, r;
    BigInt::divmod(n, den_, q, r);
    std::string int_part = q.to_string();
    size_t sig = q.is_zero() ? 0 : int_part.size();

    std::string frac;
    const BigInt ten(10);
    bool exact = r.is_zero();
    bool round_up = false;
    while (!r.is_zero()) {
        if (sig >= max_sig) {
            // peek at the next digit for half-up rounding
            BigInt d, r2;
            BigInt::divmod(r * ten, den_, d, r2);
            round_up = d >= BigInt(5);
            break;
        }
        BigInt d, r2;
        BigInt::divmod(r * ten, den_, d, r2);
        r = std::move(r2);
        char digit = static_cast<char>('0' + d.low_u64());
        frac.push_back(digit);
        if (sig > 0 || digit != '0') ++sig;
        if (r.is_zero()) exact = true;
    }

    if (round_up) {
        // propagate the carry through frac and, if needed, the integer part
        size_t i = frac.size();
        while (i > 0) {
            --i;
            if (frac[i] == '9') {
                frac[i] = '0';
            } else {
                ++frac[i];
                round_up = false;
                break;
            }
        }
        if (round_up) {
            BigInt qi = q + BigInt(1);
            int_part = qi.to_string();
        }
    }
    if (exact) {
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
    }

    std::string out;
    if (num_.is_negative()) out.push_back('-');
    out += int_part;
    if (!frac.empty()) {
        out.push_back('.');
        out += frac;
    }
    return out;
}

} // namespace ssatc
