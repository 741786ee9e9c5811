#include <doctest.h>

#include <numeric>

#include "arithdeg/ideal_count.hpp"

using namespace arithdeg;

TEST_CASE("local counts: pinned examples, HNF-oracle-confirmed") {
    FieldData f19 = validate_field(-19);
    FieldData f4 = validate_field(-4);

    for (long long ell : {2, 5, 19})
        CHECK(count_ideals_local(f19, ell, FactoredRational{}) == 1); // unit ideal

    CHECK(count_ideals_local(f19, 5, factorize(125)) == 4); // split, k = 3
    CHECK(count_ideals_hnf(f19, 125) == 4);

    CHECK(count_ideals_local(f19, 2, factorize(2)) == 0); // inert, k odd
    CHECK(count_ideals_hnf(f19, 2) == 0);

    CHECK(count_ideals_local(f19, 19, factorize(19 * 19 * 19)) == 1); // ramified
    CHECK(count_ideals_hnf(f19, 19 * 19 * 19) == 1);

    // non-integral norm
    CHECK(count_ideals_local(f19, 5, factorize(2) / factorize(5)) == 0);
    CHECK(count_ideals_local(f4, 2, factorize(1) / factorize(2)) == 0);

    CHECK_THROWS_AS(count_ideals_local(f19, 5, factorize(-5)), validation_error);
}

TEST_CASE("global counts: pinned examples, both-oracle-confirmed") {
    FieldData f19 = validate_field(-19);
    FieldData f4 = validate_field(-4);

    CHECK(count_ideals(f19, 1) == 1);
    CHECK(count_ideals_hnf(f19, 1) == 1); // only the full lattice

    CHECK(count_ideals(f19, 5) == 2);
    CHECK(count_ideals_hnf(f19, 5) == 2);
    CHECK(count_ideals_divisor_sum(f19, 5) == 2); // 1 + chi(5) = 1 + 1

    CHECK(count_ideals(f19, 2) == 0);
    CHECK(count_ideals_hnf(f19, 2) == 0);

    CHECK(count_ideals(f4, 10) == 2); // R_2 = 1 (ramified) x R_5 = 2 (split)
    CHECK(count_ideals_hnf(f4, 10) == 2);

    CHECK(count_ideals_hnf(f19, 4) == 1);         // divisor sum: 1 - 1 + 1
    CHECK(count_ideals_divisor_sum(f19, 4) == 1);

    CHECK(count_ideals(f19, factorize(3) / factorize(2)) == 0);
    CHECK_THROWS_AS(count_ideals(f19, factorize(-6)), validation_error);
    CHECK_THROWS_AS(count_ideals_hnf(f19, kIdealOracleBound + 1), bound_error);
    CHECK_THROWS_AS(count_ideals_hnf(f19, 0), validation_error);
}

TEST_CASE("triple agreement across the test fields") {
    for (long long d_K : {-3, -4, -7, -8, -11, -19, -20, -24, -163}) {
        FieldData field = validate_field(d_K);
        for (long long n = 1; n <= 400; ++n) {
            long long product = count_ideals(field, n);
            REQUIRE(product == count_ideals_hnf(field, n));
            REQUIRE(product == count_ideals_divisor_sum(field, n));
        }
    }
}

TEST_CASE("multiplicativity on coprime supports") {
    FieldData field = validate_field(-24);
    for (long long a = 1; a <= 60; ++a) {
        for (long long b = 1; b <= 60; ++b) {
            if (std::gcd(a, b) != 1) continue;
            REQUIRE(count_ideals(field, a * b) ==
                    count_ideals(field, a) * count_ideals(field, b));
        }
    }
}

TEST_CASE("negative exponent anywhere kills the global count") {
    FieldData field = validate_field(-19);
    CHECK(count_ideals(field, factorize(35) / factorize(2)) == 0);
    CHECK(count_ideals(field, factorize(5) / factorize(7)) == 0);
    CHECK(count_ideals(field, factorize(35) / factorize(5)) == 2); // R(7), 7 split
}
