#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace hypercov {

using BigInt = mpz_class;

/// Exact rational in lowest terms with a positive denominator.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    ExactRational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    /// Throws InvalidArgument on a zero denominator.
    ExactRational(const BigInt& num, const BigInt& den);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    /// Nearest-ish double (truncated mantissa).
    double to_double() const { return value_.get_d(); }
    /// "num/den", or "num" when the denominator is 1.
    std::string str() const;
    /// Decimal with `digits` significant digits, rounded half away from zero;
    /// scientific notation outside [1e-5, 1e15).
    std::string to_decimal(int digits) const;

    const mpq_class& raw() const noexcept { return value_; }

    friend ExactRational operator+(const ExactRational& a, const ExactRational& b) { return wrap(a.value_ + b.value_); }
    friend ExactRational operator-(const ExactRational& a, const ExactRational& b) { return wrap(a.value_ - b.value_); }
    friend ExactRational operator*(const ExactRational& a, const ExactRational& b) { return wrap(a.value_ * b.value_); }
    /// Throws InvalidArgument on division by zero.
    friend ExactRational operator/(const ExactRational& a, const ExactRational& b);

    ExactRational& operator+=(const ExactRational& o) { return *this = *this + o; }
    ExactRational& operator-=(const ExactRational& o) { return *this = *this - o; }
    ExactRational& operator*=(const ExactRational& o) { return *this = *this * o; }
    ExactRational& operator/=(const ExactRational& o) { return *this = *this / o; }

    friend bool operator==(const ExactRational& a, const ExactRational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

private:
    static ExactRational wrap(mpq_class v) {
        ExactRational r;
        r.value_ = std::move(v);
        r.value_.canonicalize();
        return r;
    }

    mpq_class value_;
};

BigInt factorial(std::uint64_t n);
BigInt pow(const BigInt& base, std::uint64_t exp);
/// Binomial C(n, k) for a possibly huge n and small k via the falling product.
BigInt binomial(const BigInt& n, std::uint64_t k);

}  // namespace hypercov
