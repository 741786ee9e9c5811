#include "arithdeg/quadratic_field.hpp"

#include <utility>

namespace arithdeg {

bool is_prime(long long n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (long long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

int kronecker_symbol(long long a, long long n) {
    if (a == 0 && n == 0)
        throw validation_error("kronecker_symbol: (0 | 0) is undefined");
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && n % 2 == 0) return 0;

    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    // (a | 2) per the second supplement applied to each factor of 2 in n
    while (n % 2 == 0) {
        n /= 2;
        long long am = ((a % 8) + 8) % 8;
        if (am == 3 || am == 5) result = -result;
    }
    // Jacobi by reciprocity; n is odd and positive from here on
    a = ((a % n) + n) % n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long nm = n % 8;
            if (nm == 3 || nm == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

const char* to_string(SplitKind kind) {
    switch (kind) {
        case SplitKind::split: return "split";
        case SplitKind::inert: return "inert";
        case SplitKind::ramified: return "ramified";
    }
    return "?";
}

FieldData validate_field(long long d_K) {
    if (d_K >= 0)
        throw validation_error("validate_field: discriminant must be negative, got " +
                               std::to_string(d_K));
    long long mod4 = ((d_K % 4) + 4) % 4;
    if (mod4 == 2 || mod4 == 3)
        throw validation_error("validate_field: " + std::to_string(d_K) +
                               " is 2 or 3 mod 4, not a discriminant");
    FactoredRational factors = factorize(d_K);
    auto squarefree = [](const FactoredRational& f) {
        for (const auto& [p, e] : f.exponents())
            if (e > 1) return false;
        return true;
    };
    if (mod4 == 1) {
        if (!squarefree(factors))
            throw validation_error("validate_field: " + std::to_string(d_K) +
                                   " is 1 mod 4 but not squarefree");
    } else {
        long long quarter = d_K / 4;
        long long qmod4 = ((quarter % 4) + 4) % 4;
        if (qmod4 != 2 && qmod4 != 3)
            throw validation_error("validate_field: non-fundamental discriminant " +
                                   std::to_string(d_K) + " (" + std::to_string(quarter) +
                                   " = d/4 is 0 or 1 mod 4)");
        if (!squarefree(factorize(quarter)))
            throw validation_error("validate_field: non-fundamental discriminant " +
                                   std::to_string(d_K) + " (d/4 not squarefree)");
    }
    return FieldData{d_K, factors, static_cast<int>(factors.support().size())};
}

SplittingData splitting_type(const FieldData& field, long long ell) {
    if (!is_prime(ell))
        throw validation_error("splitting_type: " + std::to_string(ell) + " is not prime");
    if (field.disc_factors.ord(ell) != 0)
        return SplittingData{ell, SplitKind::ramified, 2, 1};
    int chi = kronecker_symbol(field.disc, ell);
    return chi == 1 ? SplittingData{ell, SplitKind::split, 1, 1}
                    : SplittingData{ell, SplitKind::inert, 1, 2};
}

} // namespace arithdeg
