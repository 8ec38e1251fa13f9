#include "ssatc/bigint.hpp"

#include "ssatc/error.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace ssatc {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::TautologicalClause: return "TautologicalClause";
        case Errc::DuplicateBinding: return "DuplicateBinding";
        case Errc::NotAMatrixClause: return "NotAMatrixClause";
        case Errc::PremiseViolated: return "PremiseViolated";
        case Errc::PivotMissing: return "PivotMissing";
        case Errc::TautologicalResolvent: return "TautologicalResolvent";
        case Errc::PrefixOrderViolated: return "PrefixOrderViolated";
        case Errc::DcPolicyVariablesOutsideCommon: return "DcPolicyVariablesOutsideCommon";
        case Errc::TooLarge: return "TooLarge";
        case Errc::ParseError: return "ParseError";
        case Errc::DistributionSumError: return "DistributionSumError";
        case Errc::UnknownState: return "UnknownState";
        case Errc::MissingTarget: return "MissingTarget";
        case Errc::MissingRegion: return "MissingRegion";
        case Errc::PartitionNotCovering: return "PartitionNotCovering";
        case Errc::NotStabilized: return "NotStabilized";
        case Errc::KernelNotInvariant: return "KernelNotInvariant";
        case Errc::InvalidFormula: return "InvalidFormula";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::InternalCheckFailed: return "InternalCheckFailed";
    }
    return "Error";
}

BigInt::BigInt(long long v) {
    if (v == 0) return;
    negative_ = v < 0;
    // avoid overflow on LLONG_MIN
    unsigned long long m = negative_ ? (~static_cast<unsigned long long>(v) + 1ull)
                                     : static_cast<unsigned long long>(v);
    while (m != 0) {
        limbs_.push_back(static_cast<uint32_t>(m & 0xffffffffull));
        m >>= 32;
    }
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    const std::vector<uint32_t>& lo = a.size() >= b.size() ? a : b;
    const std::vector<uint32_t>& sh = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> out(lo.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < lo.size(); ++i) {
        uint64_t s = carry + lo[i] + (i < sh.size() ? sh[i] : 0);
        out[i] = static_cast<uint32_t>(s);
        carry = s >> 32;
    }
    out[lo.size()] = static_cast<uint32_t>(carry);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    assert(cmp_mag(a, b) >= 0);
    std::vector<uint32_t> out(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t d = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (d < 0) {
            d += (1ll << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<uint32_t>(d);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> out(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        uint64_t ai = a[i];
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = out[i + j] + ai * b[j] + carry;
            out[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry != 0) {
            uint64_t cur = out[k] + carry;
            out[k] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Knuth algorithm D, base 2^32.
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    assert(!b.empty());
    q.clear();
    r.clear();
    if (cmp_mag(a, b) < 0) {
        r = a;
        return;
    }
    if (b.size() == 1) {
        uint64_t d = b[0];
        q.assign(a.size(), 0);
        uint64_t rem = 0;
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a[i];
            q[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem != 0) r.push_back(static_cast<uint32_t>(rem));
        return;
    }

    // Normalize so the divisor's top limb has its high bit set.
    int shift = 0;
    for (uint32_t top = b.back(); (top & 0x80000000u) == 0; top <<= 1) ++shift;
    size_t n = b.size();
    size_t m = a.size() - n;

    std::vector<uint32_t> u(a.size() + 1, 0);
    std::vector<uint32_t> v(n, 0);
    if (shift == 0) {
        for (size_t i = 0; i < a.size(); ++i) u[i] = a[i];
        v = b;
    } else {
        uint32_t carry = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            u[i] = (a[i] << shift) | carry;
            carry = a[i] >> (32 - shift);
        }
        u[a.size()] = carry;
        carry = 0;
        for (size_t i = 0; i < n; ++i) {
            v[i] = (b[i] << shift) | carry;
            carry = b[i] >> (32 - shift);
        }
        assert(carry == 0);
    }

    q.assign(m + 1, 0);
    const uint64_t base = 1ull << 32;
    for (size_t j = m + 1; j-- > 0;) {
        uint64_t top = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        uint64_t qhat = top / v[n - 1];
        uint64_t rhat = top % v[n - 1];
        while (qhat >= base ||
               qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += v[n - 1];
            if (rhat >= base) break;
        }
        // multiply-subtract
        int64_t borrow = 0;
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t p = qhat * v[i] + carry;
            carry = p >> 32;
            int64_t t = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffull) - borrow;
            if (t < 0) {
                t += static_cast<int64_t>(base);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<uint32_t>(t);
        }
        int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
        if (t < 0) {
            // qhat was one too large: add back
            t += static_cast<int64_t>(base);
            --qhat;
            uint64_t c2 = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<uint32_t>(s);
                c2 = s >> 32;
            }
            t += static_cast<int64_t>(c2);
        }
        u[j + n] = static_cast<uint32_t>(t);
        q[j] = static_cast<uint32_t>(qhat);
    }

    while (!q.empty() && q.back() == 0) q.pop_back();
    r.assign(u.begin(), u.begin() + n);
    if (shift != 0) {
        uint32_t carry = 0;
        for (size_t i = n; i-- > 0;) {
            uint32_t cur = r[i];
            r[i] = (cur >> shift) | carry;
            carry = cur << (32 - shift);
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    if (!out.is_zero()) out.negative_ = !out.negative_;
    return out;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    out.negative_ = false;
    return out;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    BigInt out;
    if (a.negative_ == b.negative_) {
        out.limbs_ = BigInt::add_mag(a.limbs_, b.limbs_);
        out.negative_ = a.negative_;
    } else {
        int c = BigInt::cmp_mag(a.limbs_, b.limbs_);
        if (c == 0) return BigInt();
        if (c > 0) {
            out.limbs_ = BigInt::sub_mag(a.limbs_, b.limbs_);
            out.negative_ = a.negative_;
        } else {
            out.limbs_ = BigInt::sub_mag(b.limbs_, a.limbs_);
            out.negative_ = b.negative_;
        }
    }
    out.trim();
    return out;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt out;
    out.limbs_ = BigInt::mul_mag(a.limbs_, b.limbs_);
    out.negative_ = !out.limbs_.empty() && (a.negative_ != b.negative_);
    return out;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw Error(Errc::InvalidArgument, "division by zero");
    std::vector<uint32_t> qm, rm;
    divmod_mag(a.limbs_, b.limbs_, qm, rm);
    q.limbs_ = std::move(qm);
    q.negative_ = !q.limbs_.empty() && (a.negative_ != b.negative_);
    r.limbs_ = std::move(rm);
    r.negative_ = !r.limbs_.empty() && a.negative_;
}

BigInt BigInt::operator/(const BigInt& b) const {
    BigInt q, r;
    divmod(*this, b, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& b) const {
    BigInt q, r;
    divmod(*this, b, q, r);
    return r;
}

std::strong_ordering BigInt::operator<=>(const BigInt& b) const {
    if (negative_ != b.negative_)
        return negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
    int c = cmp_mag(limbs_, b.limbs_);
    if (negative_) c = -c;
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    BigInt x = a.abs();
    BigInt y = b.abs();
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    // binary GCD
    unsigned shift = 0;
    while (x.is_even() && y.is_even()) {
        x = x.shifted_right(1);
        y = y.shifted_right(1);
        ++shift;
    }
    while (x.is_even()) x = x.shifted_right(1);
    while (!y.is_zero()) {
        while (y.is_even()) y = y.shifted_right(1);
        if (x > y) std::swap(x, y);
        y = y - x;
    }
    return x.shifted_left(shift);
}

BigInt BigInt::shifted_left(unsigned bits) const {
    if (is_zero() || bits == 0) return *this;
    BigInt out;
    out.negative_ = negative_;
    unsigned limb_shift = bits / 32;
    unsigned bit_shift = bits % 32;
    out.limbs_.assign(limbs_.size() + limb_shift + 1, 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t v = static_cast<uint64_t>(limbs_[i]) << bit_shift;
        out.limbs_[i + limb_shift] |= static_cast<uint32_t>(v);
        out.limbs_[i + limb_shift + 1] |= static_cast<uint32_t>(v >> 32);
    }
    out.trim();
    return out;
}

BigInt BigInt::shifted_right(unsigned bits) const {
    if (is_zero() || bits == 0) return *this;
    unsigned limb_shift = bits / 32;
    unsigned bit_shift = bits % 32;
    if (limb_shift >= limbs_.size()) return BigInt();
    BigInt out;
    out.negative_ = negative_;
    out.limbs_.assign(limbs_.size() - limb_shift, 0);
    for (size_t i = 0; i < out.limbs_.size(); ++i) {
        uint64_t v = limbs_[i + limb_shift] >> bit_shift;
        if (bit_shift != 0 && i + limb_shift + 1 < limbs_.size())
            v |= static_cast<uint64_t>(limbs_[i + limb_shift + 1]) << (32 - bit_shift);
        out.limbs_[i] = static_cast<uint32_t>(v);
    }
    out.trim();
    return out;
}

BigInt BigInt::from_string(std::string_view s) {
    if (s.empty()) throw Error(Errc::ParseError, "empty integer literal");
    bool neg = false;
    size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw Error(Errc::ParseError, "bad integer literal");
    BigInt out;
    const BigInt chunk_base(1000000000ll);
    uint64_t acc = 0;
    int acc_digits = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw Error(Errc::ParseError, "bad digit in integer literal");
        acc = acc * 10 + static_cast<uint64_t>(s[i] - '0');
        if (++acc_digits == 9) {
            out = out * chunk_base + BigInt(static_cast<long long>(acc));
            acc = 0;
            acc_digits = 0;
        }
    }
    if (acc_digits > 0) {
        uint64_t p = 1;
        for (int k = 0; k < acc_digits; ++k) p *= 10;
        out = out * BigInt(static_cast<long long>(p)) + BigInt(static_cast<long long>(acc));
    }
    if (neg && !out.is_zero()) out.negative_ = true;
    return out;
}

BigInt BigInt::pow10(unsigned n) {
    BigInt out(1);
    BigInt ten(10);
    for (unsigned i = 0; i < n; ++i) out = out * ten;
    return out;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<uint32_t> chunks;
    std::vector<uint32_t> cur = limbs_;
    const uint64_t d = 1000000000ull;
    while (!cur.empty()) {
        uint64_t rem = 0;
        for (size_t i = cur.size(); i-- > 0;) {
            uint64_t x = (rem << 32) | cur[i];
            cur[i] = static_cast<uint32_t>(x / d);
            rem = x % d;
        }
        while (!cur.empty() && cur.back() == 0) cur.pop_back();
        chunks.push_back(static_cast<uint32_t>(rem));
    }
    std::string out;
    if (negative_) out.push_back('-');
    out += std::to_string(chunks.back());
    for (size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

double BigInt::to_double() const {
    double out = 0.0;
    for (size_t i = limbs_.size(); i-- > 0;) out = out * 4294967296.0 + limbs_[i];
    return negative_ ? -out : out;
}

size_t BigInt::hash() const {
    size_t h = negative_ ? 0x9e3779b97f4a7c15ull : 0;
    for (uint32_t l : limbs_) h = h * 1099511628211ull ^ l;
    return h;
}

uint64_t BigInt::low_u64() const {
    uint64_t v = limbs_.empty() ? 0 : limbs_[0];
    if (limbs_.size() > 1) v |= static_cast<uint64_t>(limbs_[1]) << 32;
    return v;
}

} // namespace ssatc
