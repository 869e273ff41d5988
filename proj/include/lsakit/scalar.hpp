#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "lsakit/bigint.hpp"
#include "lsakit/errors.hpp"

namespace lsakit {

/// Largest prime allowed for F_p; keeps residue products inside int64 and
/// brute-force candidate spaces inside the global cap.
inline constexpr std::uint32_t kMaxPrime = 65521;

struct FieldSpec {
    enum class Kind { rationals, prime };

    Kind kind = Kind::rationals;
    std::uint32_t p = 0;  // set only for prime fields

    static FieldSpec rationals() { return FieldSpec{}; }

    static FieldSpec prime(std::uint32_t p) {
        if (p < 2 || p > kMaxPrime || !is_prime(p))
            throw error(errc::parse_error, "not a supported prime: " + std::to_string(p));
        return FieldSpec{Kind::prime, p};
    }

    bool is_rationals() const { return kind == Kind::rationals; }
    bool is_prime() const { return kind == Kind::prime; }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

    std::string str() const {
        return is_rationals() ? std::string("Q") : "F_" + std::to_string(p);
    }

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint32_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }
};

inline void require_same_field(const FieldSpec& a, const FieldSpec& b) {
    if (!(a == b))
        throw error(errc::field_mismatch, "field mismatch: " + a.str() + " vs " + b.str());
}

/// Exact field element in canonical form. Over Q: reduced fraction with
/// positive denominator. Over F_p: residue in [0, p), kept in a machine word
/// so the finite-field sweeps stay fast.
class Scalar {
public:
    Scalar() = default;  // 0 over Q

    static Scalar zero(const FieldSpec& f) { return integer(f, 0); }
    static Scalar one(const FieldSpec& f) { return integer(f, 1); }

    static Scalar integer(const FieldSpec& f, std::int64_t v) {
        Scalar s;
        s.field_ = f;
        if (f.is_prime()) {
            std::int64_t p = f.p;
            s.res_ = ((v % p) + p) % p;
        } else {
            s.num_ = BigInt(v);
            s.den_ = BigInt(1);
        }
        return s;
    }

    static Scalar rational(BigInt num, BigInt den) {
        Scalar s;
        s.field_ = FieldSpec::rationals();
        s.assign_reduced(std::move(num), std::move(den));
        return s;
    }

    static Scalar residue(const FieldSpec& f, std::int64_t v) {
        if (!f.is_prime())
            throw error(errc::field_mismatch, "residue scalar needs a prime field");
        return integer(f, v);
    }

    /// Accepts "n" or "n/d" over Q, an integer (reduced mod p) over F_p.
    static Scalar parse(const FieldSpec& f, std::string_view text) {
        auto slash = text.find('/');
        if (f.is_prime()) {
            if (slash != std::string_view::npos)
                throw error(errc::parse_error, "fraction literal over a prime field: '" + std::string(text) + "'");
            BigInt v = BigInt::parse(text);
            BigInt r = v % BigInt(static_cast<std::int64_t>(f.p));
            return integer(f, r.to_int64());
        }
        if (slash == std::string_view::npos)
            return rational(BigInt::parse(text), BigInt(1));
        return rational(BigInt::parse(text.substr(0, slash)), BigInt::parse(text.substr(slash + 1)));
    }

    const FieldSpec& field() const { return field_; }

    bool is_zero() const { return field_.is_prime() ? res_ == 0 : num_.is_zero(); }
    bool is_one() const { return field_.is_prime() ? res_ == 1 : (num_.is_one() && den_.is_one()); }

    /// Residue value over F_p.
    std::int64_t residue_value() const {
        if (!field_.is_prime())
            throw error(errc::field_mismatch, "residue_value on a rational scalar");
        return res_;
    }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    std::string str() const {
        if (field_.is_prime()) return std::to_string(res_);
        if (den_.is_one()) return num_.str();
        return num_.str() + "/" + den_.str();
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        require_same_field(a.field_, b.field_);
        if (a.field_.is_prime()) return prime_raw(a.field_, a.res_ + b.res_);
        return rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        require_same_field(a.field_, b.field_);
        if (a.field_.is_prime()) return prime_raw(a.field_, a.res_ - b.res_ + a.field_.p);
        return rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        require_same_field(a.field_, b.field_);
        if (a.field_.is_prime()) return prime_raw(a.field_, a.res_ * b.res_);
        return rational(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    Scalar operator-() const {
        if (field_.is_prime()) return prime_raw(field_, field_.p - res_);
        Scalar s = *this;
        s.num_ = s.num_.negated();
        return s;
    }

    Scalar inverse() const {
        if (is_zero())
            throw error(errc::division_by_zero, "inverse of zero in " + field_.str());
        if (field_.is_prime()) {
            // extended Euclid on machine words
            std::int64_t t = 0, newt = 1, r = field_.p, newr = res_;
            while (newr != 0) {
                std::int64_t q = r / newr;
                std::int64_t tmp = t - q * newt;
                t = newt;
                newt = tmp;
                tmp = r - q * newr;
                r = newr;
                newr = tmp;
            }
            return prime_raw(field_, t + field_.p);
        }
        return rational(den_, num_);
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.field_ == b.field_ && a.res_ == b.res_ && a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    FieldSpec field_;
    std::int64_t res_ = 0;  // prime fields only
    BigInt num_, den_;      // rationals only

    static Scalar prime_raw(const FieldSpec& f, std::int64_t v) {
        Scalar s;
        s.field_ = f;
        s.res_ = v % f.p;
        return s;
    }

    void assign_reduced(BigInt num, BigInt den) {
        if (den.is_zero())
            throw error(errc::division_by_zero, "zero denominator");
        if (num.is_zero()) {
            num_ = BigInt{};
            den_ = BigInt(1);
            return;
        }
        if (den.sign() < 0) {
            num = num.negated();
            den = den.negated();
        }
        BigInt g = BigInt::gcd(num, den);
        num_ = num / g;
        den_ = den / g;
    }
};

}  // namespace lsakit
