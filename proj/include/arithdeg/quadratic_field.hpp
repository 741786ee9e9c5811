#pragma once

#include <string>

#include "arithdeg/factored_rational.hpp"

namespace arithdeg {

/// Deterministic trial-division primality test (n up to the factor bound).
bool is_prime(long long n);

/// Kronecker symbol (a | n): the completely multiplicative extension of the
/// Jacobi symbol, with the usual conventions at 2, -1 and 0. Requires that
/// a and n are not both zero.
int kronecker_symbol(long long a, long long n);

enum class SplitKind { split, inert, ramified };

const char* to_string(SplitKind kind);

/// Behavior of a rational prime in an imaginary quadratic field: e is the
/// ramification index (2 iff ramified) and f the residue degree (2 iff
/// inert), so e * f <= 2.
struct SplittingData {
    long long prime;
    SplitKind kind;
    int e;
    int f;

    bool operator==(const SplittingData&) const = default;
};

/// Validated invariants of an imaginary quadratic field: a fundamental
/// discriminant < 0, its factorization, and the number s of distinct primes
/// dividing it.
struct FieldData {
    long long disc;
    FactoredRational disc_factors;
    int s;

    bool operator==(const FieldData&) const = default;
};

/// Accepts d_K iff it is a fundamental discriminant < 0: either d_K = 1 mod 4
/// and squarefree, or d_K = 4k with k squarefree and k = 2 or 3 mod 4.
/// Distinct errors for non-negative and non-fundamental input.
FieldData validate_field(long long d_K);

/// ramified iff ell | d_K; otherwise split or inert according to the
/// Kronecker symbol (d_K | ell). At ell = 2 this is the d_K mod 8 rule:
/// split iff 1, inert iff 5.
SplittingData splitting_type(const FieldData& field, long long ell);

} // namespace arithdeg
