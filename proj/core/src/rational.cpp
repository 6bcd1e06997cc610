#include "hypercov/rational.hpp"

#include <string>

#include "hypercov/error.hpp"

namespace hypercov {

ExactRational::ExactRational(const BigInt& num, const BigInt& den) {
    if (den == 0) fail(ErrorKind::InvalidArgument, "rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

ExactRational operator/(const ExactRational& a, const ExactRational& b) {
    if (b.value_ == 0) fail(ErrorKind::InvalidArgument, "division by zero");
    return ExactRational::wrap(a.value_ / b.value_);
}

std::string ExactRational::str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string ExactRational::to_decimal(int digits) const {
    if (digits < 1) fail(ErrorKind::InvalidArgument, "decimal digits must be >= 1");
    if (value_ == 0) return "0";

    const bool negative = sgn(value_) < 0;
    mpz_class num = abs(value_.get_num());
    const mpz_class den = value_.get_den();

    // Decimal exponent e with 10^e <= |x| < 10^{e+1}.
    long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
    auto scaled_ge = [&](long exp) {  // |x| >= 10^exp ?
        mpz_class lhs = num, rhs = den, ten = 10;
        mpz_class p;
        if (exp >= 0) {
            mpz_pow_ui(p.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(exp));
            rhs *= p;
        } else {
            mpz_pow_ui(p.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(-exp));
            lhs *= p;
        }
        return lhs >= rhs;
    };
    while (!scaled_ge(e)) --e;
    while (scaled_ge(e + 1)) ++e;

    // Integer mantissa m = round(|x| * 10^{digits-1-e}), digits long (maybe one more after rounding).
    const long shift = digits - 1 - e;
    mpz_class ten = 10, p, top = num, bottom = den;
    if (shift >= 0) {
        mpz_pow_ui(p.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(shift));
        top *= p;
    } else {
        mpz_pow_ui(p.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(-shift));
        bottom *= p;
    }
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), bottom.get_mpz_t());
    if (2 * r >= bottom) ++q;
    std::string mant = q.get_str();
    if (static_cast<int>(mant.size()) > digits) {  // rounding carried, e.g. 9.99 -> 10.0
        mant.pop_back();
        ++e;
    }
    // Trim trailing zeros.
    while (mant.size() > 1 && mant.back() == '0') mant.pop_back();

    std::string out = negative ? "-" : "";
    if (e >= -5 && e < 15) {
        if (e >= 0) {
            const auto int_len = static_cast<std::size_t>(e + 1);
            if (mant.size() <= int_len) {
                out += mant + std::string(int_len - mant.size(), '0');
            } else {
                out += mant.substr(0, int_len) + "." + mant.substr(int_len);
            }
        } else {
            out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + mant;
        }
    } else {
        out += mant.substr(0, 1);
        if (mant.size() > 1) out += "." + mant.substr(1);
        out += (e < 0 ? "e-" : "e+") + std::to_string(e < 0 ? -e : e);
    }
    return out;
}

BigInt factorial(std::uint64_t n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt pow(const BigInt& base, std::uint64_t exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

BigInt binomial(const BigInt& n, std::uint64_t k) {
    BigInt r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

}  // namespace hypercov
