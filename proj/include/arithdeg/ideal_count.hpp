#pragma once

#include "arithdeg/quadratic_field.hpp"

namespace arithdeg {

/// Number of ideals of the completed ring of integers at ell whose norm
/// generates x Z_ell. Depends only on k = ord_ell(x) and the splitting of
/// ell: 0 for k < 0, otherwise k+1 (split), 1 if k even else 0 (inert),
/// 1 (ramified). Requires x > 0.
long long count_ideals_local(const FieldData& field, long long ell,
                             const FactoredRational& x);

/// Number of ideals of the maximal order of norm x: the product of the local
/// counts over the support of x. Zero whenever x is not a positive integer
/// (a negative exponent makes some local factor vanish). Requires x > 0.
long long count_ideals(const FieldData& field, const FactoredRational& x);
long long count_ideals(const FieldData& field, long long n);

/// Cap for the enumeration oracle below.
inline constexpr long long kIdealOracleBound = 100'000;

/// Brute-force oracle for count_ideals: enumerates the index-n sublattices
/// of Z*1 + Z*w in Hermite normal form (column bases [[a, b], [0, c]] with
/// a c = n, 0 <= b < a) and keeps those closed under multiplication by
/// w = (d_K + sqrt(d_K))/2, acting through its integer matrix on {1, w}.
long long count_ideals_hnf(const FieldData& field, long long n);

/// Second independent oracle: sum of kronecker_symbol(d_K, d) over d | n.
long long count_ideals_divisor_sum(const FieldData& field, long long n);

} // namespace arithdeg
