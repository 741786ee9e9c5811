#include "arithdeg/quaternion.hpp"

#include <algorithm>

namespace arithdeg {

bool QuaternionData::ramified_at(long long p) const {
    return std::binary_search(ramified_primes.begin(), ramified_primes.end(), p);
}

QuaternionData validate_quaternion(long long d_B, const FieldData& field,
                                   bool allow_degenerate) {
    if (d_B <= 0)
        throw validation_error("validate_quaternion: discriminant must be positive, got " +
                               std::to_string(d_B));
    if (d_B == 1) {
        if (!allow_degenerate)
            throw validation_error(
                "validate_quaternion: d_B = 1 is the split matrix algebra; it is only "
                "available in degenerate mode");
        return QuaternionData{1, {}, true};
    }
    FactoredRational factors = factorize(d_B);
    for (const auto& [p, e] : factors.exponents())
        if (e > 1)
            throw validation_error("validate_quaternion: d_B = " + std::to_string(d_B) +
                                   " is not squarefree (divisible by " + std::to_string(p) +
                                   "^2)");
    std::vector<long long> primes = factors.support();
    if (primes.size() % 2 != 0)
        throw validation_error(
            "validate_quaternion: d_B = " + std::to_string(d_B) + " has " +
            std::to_string(primes.size()) +
            " prime divisors; an indefinite quaternion division algebra is ramified at an "
            "even number of finite places");
    for (long long p : primes) {
        SplitKind kind = splitting_type(field, p).kind;
        if (kind != SplitKind::inert)
            throw validation_error("validate_quaternion: prime " + std::to_string(p) +
                                   " dividing d_B is " + to_string(kind) +
                                   " in the field of discriminant " +
                                   std::to_string(field.disc) + "; it must be inert");
    }
    return QuaternionData{d_B, std::move(primes), false};
}

int local_invariant(const QuaternionData& q, const Place& v) {
    return v.is_finite() && q.ramified_at(v.prime()) ? -1 : 1;
}

} // namespace arithdeg
