#pragma once

#include <numeric>
#include <string>

namespace arithdeg {

/// Minimal exact rational: normalized so den > 0 and gcd(|num|, den) = 1.
/// Used for the length formulas, which are a priori half-integers and whose
/// integrality is asserted by callers rather than assumed.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {} // NOLINT(google-explicit-constructor)
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    bool is_integer() const { return den == 1; }
    bool is_nonnegative() const { return num >= 0; }

    bool operator==(const Rational&) const = default;

    std::string str() const {
        return den == 1 ? std::to_string(num)
                        : std::to_string(num) + "/" + std::to_string(den);
    }

private:
    void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
};

} // namespace arithdeg
