#include <doctest.h>

#include <random>

#include "arithdeg/quadratic_field.hpp"

using namespace arithdeg;

namespace {

// Root count of the minimal polynomial of the integer generator mod ell:
// x^2 - x + (1 - d)/4 for odd d, x^2 - d/4 for even d. The splitting type
// must see 2, 0 or 1 roots for split, inert, ramified.
int minpoly_roots_mod(long long d, long long ell) {
    long long c0 = d % 2 != 0 ? (1 - d) / 4 : -(d / 4);
    long long c1 = d % 2 != 0 ? -1 : 0;
    int roots = 0;
    for (long long x = 0; x < ell; ++x) {
        long long v = ((x * x + c1 * x + c0) % ell + ell) % ell;
        if (v == 0) ++roots;
    }
    return roots;
}

} // namespace

TEST_CASE("kronecker symbol: pinned values") {
    for (long long a : {-7, -1, 0, 2, 9, 15})
        CHECK(kronecker_symbol(a, 1) == 1); // empty product
    CHECK(kronecker_symbol(-19, 5) == 1);   // -19 = 1 = 1^2 mod 5
    CHECK(kronecker_symbol(-19, 2) == -1);  // -19 = 5 mod 8
    CHECK(kronecker_symbol(12, 2) == 0);
    CHECK(kronecker_symbol(0, 9) == 0);
    CHECK(kronecker_symbol(7, 0) == 0);
    CHECK(kronecker_symbol(-1, 0) == 1);
    CHECK_THROWS_AS(kronecker_symbol(0, 0), validation_error);
}

TEST_CASE("kronecker symbol agrees with Legendre via Euler's criterion") {
    for (long long ell : {3, 5, 7, 11, 13, 17, 19, 23}) {
        for (long long a = -30; a <= 30; ++a) {
            if (a % ell == 0) continue;
            // Euler: a^((ell-1)/2) mod ell
            long long pow = 1, base = ((a % ell) + ell) % ell;
            for (long long i = 0; i < (ell - 1) / 2; ++i) pow = pow * base % ell;
            int euler = pow == 1 ? 1 : -1;
            REQUIRE(kronecker_symbol(a, ell) == euler);
        }
    }
}

TEST_CASE("kronecker symbol is completely multiplicative in each argument") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long long> dist(-300, 300);
    for (int i = 0; i < 2000; ++i) {
        long long a = dist(rng), b = dist(rng), n = dist(rng);
        if ((a == 0 && n == 0) || (b == 0 && n == 0) || (a * b == 0 && n == 0)) continue;
        REQUIRE(kronecker_symbol(a * b, n) ==
                kronecker_symbol(a, n) * kronecker_symbol(b, n));
        if (a == 0 || b == 0) continue;
        REQUIRE(kronecker_symbol(n, a * b) ==
                kronecker_symbol(n, a) * kronecker_symbol(n, b));
    }
}

TEST_CASE("validate_field: pinned examples") {
    FieldData f19 = validate_field(-19);
    CHECK(f19.disc == -19);
    CHECK(f19.s == 1);

    FieldData f4 = validate_field(-4);
    CHECK(f4.disc == -4);
    CHECK(f4.s == 1); // -4/4 = -1 = 3 mod 4

    CHECK_THROWS_AS(validate_field(-12), validation_error); // -12/4 = -3 = 1 mod 4
    CHECK_THROWS_AS(validate_field(5), validation_error);   // non-negative
    CHECK_THROWS_AS(validate_field(0), validation_error);
    CHECK_THROWS_AS(validate_field(-9), validation_error);  // 1 mod 4, not squarefree
    CHECK_THROWS_AS(validate_field(-6), validation_error);  // 2 mod 4
    CHECK(validate_field(-20).s == 2);
    CHECK(validate_field(-163).s == 1);
}

TEST_CASE("splitting_type: pinned examples") {
    FieldData f = validate_field(-19);
    CHECK(splitting_type(f, 19) == SplittingData{19, SplitKind::ramified, 2, 1});
    CHECK(splitting_type(f, 2) == SplittingData{2, SplitKind::inert, 1, 2});
    CHECK(splitting_type(f, 5) == SplittingData{5, SplitKind::split, 1, 1});
    CHECK_THROWS_AS(splitting_type(f, 6), validation_error);
}

TEST_CASE("splitting: ramified iff the prime divides the discriminant") {
    std::vector<long long> primes;
    for (long long p = 2; p <= 100; ++p)
        if (is_prime(p)) primes.push_back(p);
    for (long long d = -10'000; d < 0; ++d) {
        FieldData field;
        try {
            field = validate_field(d);
        } catch (const validation_error&) {
            continue;
        }
        for (long long p : primes) {
            bool divides = d % p == 0;
            REQUIRE((splitting_type(field, p).kind == SplitKind::ramified) == divides);
        }
    }
}

TEST_CASE("splitting agrees with the root-counting oracle at odd primes") {
    std::vector<long long> primes;
    for (long long p = 3; p <= 100; ++p)
        if (is_prime(p)) primes.push_back(p);
    for (long long d = -10'000; d < 0; ++d) {
        FieldData field;
        try {
            field = validate_field(d);
        } catch (const validation_error&) {
            continue;
        }
        for (long long p : primes) {
            int roots = minpoly_roots_mod(d, p);
            SplitKind kind = splitting_type(field, p).kind;
            int expected = kind == SplitKind::split ? 2 : (kind == SplitKind::inert ? 0 : 1);
            REQUIRE(roots == expected);
        }
    }
}
