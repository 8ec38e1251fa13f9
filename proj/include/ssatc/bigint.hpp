#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ssatc {

/// Arbitrary-precision signed integer. Sign + magnitude, little-endian
/// 32-bit limbs, no trailing zero limbs (zero has an empty limb vector).
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    static BigInt from_string(std::string_view s); // [+-]?[0-9]+
    static BigInt pow10(unsigned n);

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    bool is_one() const { return !negative_ && limbs_.size() == 1 && limbs_[0] == 1; }
    int signum() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }
    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    // Truncating division; remainder carries the dividend's sign.
    // Requires b != 0.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    BigInt operator/(const BigInt& b) const;
    BigInt operator%(const BigInt& b) const;

    BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
    BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
    BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

    bool operator==(const BigInt& b) const = default;
    std::strong_ordering operator<=>(const BigInt& b) const;

    static BigInt gcd(const BigInt& a, const BigInt& b); // non-negative

    BigInt shifted_left(unsigned bits) const;
    BigInt shifted_right(unsigned bits) const;

    std::string to_string() const;
    double to_double() const;
    size_t hash() const;

    // Low 64 bits of the magnitude (for small-value fast paths).
    uint64_t low_u64() const;
    bool fits_u64() const { return limbs_.size() <= 2; }

private:
    bool negative_ = false;          // never set for zero
    std::vector<uint32_t> limbs_;    // little-endian magnitude

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b); // a >= b
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

} // namespace ssatc
