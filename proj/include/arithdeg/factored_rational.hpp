#pragma once

#include <map>
#include <string>
#include <vector>

#include "arithdeg/errors.hpp"

namespace arithdeg {

/// Default cap on |n| for trial-division factorization. Raise it at runtime
/// with the ARITHDEG_FACTOR_BOUND environment variable (never lowered).
inline constexpr long long kDefaultFactorBound = 1'000'000'000'000LL;

/// Effective factorization bound for this process.
long long factor_bound();

/// A nonzero rational number in factored form: sign * prod p^{e_p}, every key
/// prime, every exponent nonzero. The representation is canonical, so two
/// FactoredRationals representing the same rational compare equal. Zero is
/// not representable.
///
/// This is the interchange type for every valuation-sensitive quantity in the
/// library; the degree formulas only ever read ord_p of their arguments.
class FactoredRational {
public:
    FactoredRational() = default; // the rational 1

    /// Factorizes n by trial division. Throws validation_error for n = 0 and
    /// bound_error for |n| > factor_bound().
    static FactoredRational from_integer(long long n);

    /// p^e for a prime p (e may be negative or zero).
    static FactoredRational prime_power(long long p, int e);

    int sign() const { return sign_; }

    /// Exponent of p in this rational; 0 when p does not occur.
    int ord(long long p) const;

    bool is_one() const { return sign_ > 0 && exponents_.empty(); }
    bool is_positive() const { return sign_ > 0; }
    bool is_integer() const;

    /// Primes occurring with nonzero exponent, increasing.
    std::vector<long long> support() const;
    const std::map<long long, int>& exponents() const { return exponents_; }

    /// sign * prod_{e_p > 0} p^{e_p}. Throws bound_error on int64 overflow.
    long long numerator() const;
    /// prod_{e_p < 0} p^{-e_p}. Throws bound_error on int64 overflow.
    long long denominator() const;

    FactoredRational operator*(const FactoredRational& rhs) const;
    FactoredRational operator/(const FactoredRational& rhs) const;
    FactoredRational inverse() const;

    bool operator==(const FactoredRational&) const = default;

    /// "360", "-1/9", "1", ...
    std::string str() const;

private:
    int sign_ = 1;
    std::map<long long, int> exponents_;
};

/// Trial-division factorization of n != 0 with |n| <= factor_bound().
FactoredRational factorize(long long n);

} // namespace arithdeg
