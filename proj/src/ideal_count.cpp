#include "arithdeg/ideal_count.hpp"

namespace arithdeg {

long long count_ideals_local(const FieldData& field, long long ell,
                             const FactoredRational& x) {
    if (!x.is_positive())
        throw validation_error("count_ideals_local: argument must be positive");
    int k = x.ord(ell);
    if (k < 0) return 0; // no ideal has non-integral norm
    switch (splitting_type(field, ell).kind) {
        case SplitKind::split: return k + 1;
        case SplitKind::inert: return k % 2 == 0 ? 1 : 0;
        case SplitKind::ramified: return 1;
    }
    return 0;
}

long long count_ideals(const FieldData& field, const FactoredRational& x) {
    if (!x.is_positive())
        throw validation_error("count_ideals: argument must be positive");
    long long product = 1;
    for (const auto& [p, e] : x.exponents()) {
        product *= count_ideals_local(field, p, x);
        if (product == 0) break;
    }
    return product;
}

long long count_ideals(const FieldData& field, long long n) {
    return count_ideals(field, factorize(n));
}

long long count_ideals_hnf(const FieldData& field, long long n) {
    if (n < 1) throw validation_error("count_ideals_hnf: n must be a positive integer");
    if (n > kIdealOracleBound)
        throw bound_error("count_ideals_hnf: n = " + std::to_string(n) +
                          " exceeds the enumeration bound " +
                          std::to_string(kIdealOracleBound));
    // w = (d + sqrt(d))/2 has trace d and norm (d^2 - d)/4, so on the basis
    // {1, w} multiplication by w is the matrix [[0, -nm], [1, tr]].
    const __int128 tr = field.disc;
    const __int128 nm = (static_cast<__int128>(field.disc) * field.disc - field.disc) / 4;
    long long count = 0;
    for (long long a = 1; a <= n; ++a) {
        if (n % a != 0) continue;
        long long c = n / a;
        for (long long b = 0; b < a; ++b) {
            // L = {(x a + y b, y c)}; (p, q) lies in L iff c | q and
            // a | p - (q/c) b.
            auto contains = [&](__int128 p, __int128 q) {
                if (q % c != 0) return false;
                __int128 y = q / c;
                return (p - y * b) % a == 0;
            };
            // images of the basis columns under w: (a, 0) -> (0, a) and
            // (b, c) -> (-nm c, b + tr c)
            bool closed = contains(0, a) && contains(-nm * c, b + tr * c);
            if (closed) ++count;
        }
    }
    return count;
}

long long count_ideals_divisor_sum(const FieldData& field, long long n) {
    if (n < 1)
        throw validation_error("count_ideals_divisor_sum: n must be a positive integer");
    long long sum = 0;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        sum += kronecker_symbol(field.disc, d);
        if (d != n / d) sum += kronecker_symbol(field.disc, n / d);
    }
    return sum;
}

} // namespace arithdeg
