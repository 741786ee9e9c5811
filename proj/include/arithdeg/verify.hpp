#pragma once

#include <string>
#include <vector>

namespace arithdeg {

enum class VerifyLevel { quick, full };

struct SuiteResult {
    std::string name;
    bool passed;
    long long cases;
    std::string counterexample; // empty when passed
};

/// The self-verification suites, in fixed order:
///   1. Hilbert closed form against the solvability oracle
///   2. Hilbert product formula over all places, sampled
///   3. ideal counts: product formula = HNF enumeration = divisor sum
///   4. Diff_B structure: odd cardinality, no split member
///   5. two-path degree identity (closed form = f_p * count * length),
///      length integrality, and the nonvanishing clause
///   6. elliptic reduction: degenerate surface degree = elliptic degree
/// quick halves the full-level bounds. Deterministically seeded.
std::vector<SuiteResult> run_verification(VerifyLevel level);

} // namespace arithdeg
