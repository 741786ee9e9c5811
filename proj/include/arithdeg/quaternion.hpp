#pragma once

#include <vector>

#include "arithdeg/hilbert.hpp"
#include "arithdeg/quadratic_field.hpp"

namespace arithdeg {

/// Validated invariants of an indefinite rational quaternion algebra: a
/// squarefree discriminant d_B whose prime divisors (an even number of them,
/// at least two) are all inert in the ambient imaginary quadratic field.
/// d_B = 1 is the split matrix algebra; it is admitted only as an explicit
/// degenerate mode, used by the elliptic reduction, and flagged as such.
struct QuaternionData {
    long long disc;
    std::vector<long long> ramified_primes; // increasing; the primes dividing disc
    bool degenerate;                        // disc == 1

    int r() const { return static_cast<int>(ramified_primes.size()); }
    bool ramified_at(long long p) const;

    bool operator==(const QuaternionData&) const = default;
};

/// Accepts d_B iff it is squarefree with an even number of prime divisors,
/// every one of them inert in the field (the error names the first offending
/// prime). d_B = 1 is rejected unless allow_degenerate is set.
QuaternionData validate_quaternion(long long d_B, const FieldData& field,
                                   bool allow_degenerate = false);

/// Local invariant of B at v: -1 iff v is a finite place dividing d_B.
/// +1 at infinity (B is indefinite) and at all other finite places.
int local_invariant(const QuaternionData& q, const Place& v);

} // namespace arithdeg
