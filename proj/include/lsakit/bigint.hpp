#pragma once

#include <algorithm>
#include <cstdint>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "lsakit/errors.hpp"

namespace lsakit {

/// Arbitrary-precision signed integer, sign-magnitude with base-2^32 limbs
/// (little-endian, no leading zero limb). Division truncates toward zero and
/// is implemented by shift-and-subtract; operands in this kit stay a few
/// limbs long.
class BigInt {
public:
    BigInt() = default;

    BigInt(std::int64_t v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        // avoid overflow on INT64_MIN
        std::uint64_t m = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
        mag_.push_back(static_cast<std::uint32_t>(m & 0xffffffffu));
        if (m >> 32) mag_.push_back(static_cast<std::uint32_t>(m >> 32));
    }

    static BigInt parse(std::string_view s) {
        std::size_t pos = 0;
        int sign = 1;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            if (s[pos] == '-') sign = -1;
            ++pos;
        }
        if (pos == s.size())
            throw error(errc::parse_error, "empty integer literal");
        BigInt r;
        for (; pos < s.size(); ++pos) {
            char c = s[pos];
            if (c < '0' || c > '9')
                throw error(errc::parse_error, "bad digit in integer literal: '" + std::string(s) + "'");
            r.mul_small_add(10, static_cast<std::uint32_t>(c - '0'));
        }
        if (!r.mag_.empty()) r.sign_ = sign;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
    int sign() const { return sign_; }

    bool fits_int64() const {
        if (mag_.size() > 2) return false;
        std::uint64_t m = magnitude_u64();
        if (sign_ >= 0) return m <= static_cast<std::uint64_t>(INT64_MAX);
        return m <= static_cast<std::uint64_t>(INT64_MAX) + 1;
    }

    std::int64_t to_int64() const {
        if (!fits_int64())
            throw error(errc::parse_error, "integer out of int64 range: " + str());
        std::uint64_t m = magnitude_u64();
        return sign_ < 0 ? -static_cast<std::int64_t>(m - 1) - 1 : static_cast<std::int64_t>(m);
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::vector<std::uint32_t> tmp = mag_;
        std::string digits;
        while (!tmp.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = tmp.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | tmp[i];
                tmp[i] = static_cast<std::uint32_t>(cur / 10);
                rem = cur % 10;
            }
            digits.push_back(static_cast<char>('0' + rem));
            while (!tmp.empty() && tmp.back() == 0) tmp.pop_back();
        }
        if (sign_ < 0) digits.push_back('-');
        std::reverse(digits.begin(), digits.end());
        return digits;
    }

    BigInt negated() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt{};
            if (c > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.sign_ = a.sign_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + b.negated(); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt{};
        BigInt r;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (std::size_t i = 0; i < a.mag_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.mag_.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j] + r.mag_[i + j] + carry;
                r.mag_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
            }
            std::size_t k = i + b.mag_.size();
            while (carry) {
                std::uint64_t cur = r.mag_[k] + carry;
                r.mag_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    /// Truncated quotient; remainder has the sign of the dividend.
    static BigInt divmod(const BigInt& a, const BigInt& b, BigInt& rem) {
        if (b.sign_ == 0)
            throw error(errc::division_by_zero, "integer division by zero");
        int c = cmp_mag(a.mag_, b.mag_);
        if (c < 0) {
            rem = a;
            return BigInt{};
        }
        // shift-and-subtract on magnitudes
        std::size_t bits = a.mag_.size() * 32;
        BigInt q, r;
        q.mag_.assign(a.mag_.size(), 0);
        for (std::size_t i = bits; i-- > 0;) {
            r.shift_left_1();
            if (a.bit(i)) r.set_bit0();
            if (cmp_mag(r.mag_, b.mag_) >= 0) {
                r.mag_ = sub_mag(r.mag_, b.mag_);
                q.mag_[i / 32] |= (1u << (i % 32));
            }
        }
        q.trim();
        r.trim();
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
        rem = r;
        return q;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt rem;
        return divmod(a, b, rem);
    }

    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt rem;
        divmod(a, b, rem);
        return rem;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }

    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
        int c = cmp_mag(a.mag_, b.mag_);
        if (a.sign_ < 0) c = -c;
        return c <=> 0;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a = a.abs();
        b = b.abs();
        while (!b.is_zero()) {
            BigInt r = a % b;
            a = b;
            b = r;
        }
        return a;
    }

    static BigInt pow_u64(const BigInt& base, std::uint64_t e) {
        BigInt r(1), b = base;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    std::uint64_t magnitude_u64() const {
        std::uint64_t m = mag_.empty() ? 0 : mag_[0];
        if (mag_.size() > 1) m |= static_cast<std::uint64_t>(mag_[1]) << 32;
        return m;
    }

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sign_ = 0;
    }

    bool bit(std::size_t i) const {
        std::size_t limb = i / 32;
        if (limb >= mag_.size()) return false;
        return (mag_[limb] >> (i % 32)) & 1u;
    }

    void shift_left_1() {
        std::uint32_t carry = 0;
        for (auto& limb : mag_) {
            std::uint32_t next = limb >> 31;
            limb = (limb << 1) | carry;
            carry = next;
        }
        if (carry) mag_.push_back(carry);
    }

    void set_bit0() {
        if (mag_.empty()) mag_.push_back(1);
        else mag_[0] |= 1u;
    }

    void mul_small_add(std::uint32_t mul, std::uint32_t add) {
        std::uint64_t carry = add;
        for (auto& limb : mag_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * mul + carry;
            limb = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        while (carry) {
            mag_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
            carry >>= 32;
        }
        trim();
        if (!mag_.empty() && sign_ == 0) sign_ = 1;
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> r = big;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(r[i]) + (i < small.size() ? small[i] : 0) + carry;
            r[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            if (carry == 0 && i >= small.size()) break;
        }
        if (carry) r.push_back(static_cast<std::uint32_t>(carry));
        return r;
    }

    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(r[i]) - (i < b.size() ? b[i] : 0) - borrow;
            if (cur < 0) {
                cur += (1ll << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<std::uint32_t>(cur);
            if (borrow == 0 && i >= b.size()) break;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

}  // namespace lsakit
