#pragma once

#include <string>

#include "arithdeg/factored_rational.hpp"

namespace arithdeg {

/// A place of Q: a finite prime or the archimedean place.
class Place {
public:
    static Place finite(long long p);
    static Place infinite() { return Place(0); }

    bool is_finite() const { return prime_ != 0; }
    long long prime() const; // requires is_finite()

    bool operator==(const Place&) const = default;
    std::string str() const;

private:
    explicit Place(long long p) : prime_(p) {}
    long long prime_; // 0 encodes the infinite place
};

/// Hilbert symbol (a, b)_v of two nonzero rationals over the completion of Q
/// at v, by the classical closed formulas:
///   - odd ell: (-1)^{alpha beta (ell-1)/2} times the Legendre symbols of the
///     unit parts, each raised to the opposite argument's valuation;
///   - ell = 2: (-1)^{eps(u)eps(w) + alpha omega(w) + beta omega(u)} on the
///     odd parts u, w, with eps = (u-1)/2 and omega = (u^2-1)/8 mod 2;
///   - infinity: -1 iff both arguments are negative.
int hilbert_symbol(const FactoredRational& a, const FactoredRational& b,
                   const Place& v);
int hilbert_symbol(long long a, long long b, const Place& v);

/// Independent solvability oracle. Decides whether z^2 = a x^2 + b y^2 has a
/// primitive solution mod ell^k, with
///     k = 3 + 2(ord_ell(a) + ord_ell(b)) + (ell == 2 ? 3 : 0),
/// which by Hensel lifting is equivalent to nontrivial solvability over
/// Q_ell, i.e. to hilbert_symbol(a, b, ell) = +1. The search walks partial
/// solutions digit by digit in the three unit-coordinate charts; a branch
/// whose point is smooth enough to lift (valuation j >= 2 ord(gradient) + 1)
/// terminates early. Throws bound_error when ell^k or the explored node
/// count exceeds the search budget.
int hilbert_oracle(long long a, long long b, long long ell);

} // namespace arithdeg
