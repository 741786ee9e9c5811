#pragma once

#include <string>
#include <vector>

#include "arithdeg/quaternion.hpp"

namespace arithdeg {

enum class DiffVariant { plain, quaternionic };

/// The finite places where a representability obstruction occurs: increasing
/// and duplicate-free. Odd cardinality (in the quaternionic variant, under
/// the standing hypotheses) is a theorem the test suites assert, not a
/// constructor requirement.
struct DiffSet {
    std::vector<long long> primes;
    DiffVariant variant;

    bool singleton() const { return primes.size() == 1; }
    std::string str() const; // "{2, 3, 19}"

    bool operator==(const DiffSet&) const = default;
};

/// Diff(m) = { finite v : (d_K, -m)_v = -1 }. Only primes dividing 2 m d_K
/// are tested: at every other finite place both arguments are units at an
/// odd prime, where the symbol is +1.
DiffSet diff_set(const FieldData& field, long long m);

/// Diff_B(m) = { finite v : (d_K, -m)_v * inv_v(B) = -1 }, computed over the
/// primes dividing 2 m d_K d_B. In the degenerate d_B = 1 mode this reduces
/// to diff_set (with the quaternionic tag kept).
DiffSet diff_b_set(const FieldData& field, const QuaternionData& q, long long m);

} // namespace arithdeg
