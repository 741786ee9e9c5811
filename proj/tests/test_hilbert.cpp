#include <doctest.h>

#include <random>
#include <set>

#include "arithdeg/hilbert.hpp"
#include "arithdeg/quadratic_field.hpp"

using namespace arithdeg;

TEST_CASE("hilbert symbol: pinned values, oracle-confirmed") {
    for (long long b : {-6, -1, 5, 19})
        for (long long ell : {2, 3, 19})
            CHECK(hilbert_symbol(1, b, Place::finite(ell)) == 1);
    CHECK(hilbert_symbol(1, -7, Place::infinite()) == 1);

    CHECK(hilbert_symbol(-19, -1, Place::finite(19)) == -1);
    CHECK(hilbert_oracle(-19, -1, 19) == -1);

    CHECK(hilbert_symbol(-19, -6, Place::finite(2)) == -1);
    CHECK(hilbert_oracle(-19, -6, 2) == -1);

    CHECK(hilbert_symbol(-19, -6, Place::finite(3)) == -1);
    CHECK(hilbert_oracle(-19, -6, 3) == -1);

    CHECK(hilbert_symbol(-1, -1, Place::infinite()) == -1);
    CHECK(hilbert_oracle(1, 1, 3) == 1); // z = x, y = 0
}

TEST_CASE("hilbert symbol: symmetry and bimultiplicativity") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<long long> dist(-400, 400);
    std::vector<Place> places{Place::infinite(), Place::finite(2), Place::finite(3),
                              Place::finite(5), Place::finite(19)};
    for (int i = 0; i < 1500; ++i) {
        long long a = dist(rng), b = dist(rng), c = dist(rng);
        if (a == 0 || b == 0 || c == 0) continue;
        for (const Place& v : places) {
            REQUIRE(hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v));
            REQUIRE(hilbert_symbol(a * b, c, v) ==
                    hilbert_symbol(a, c, v) * hilbert_symbol(b, c, v));
            REQUIRE(hilbert_symbol(a, b * c, v) ==
                    hilbert_symbol(a, b, v) * hilbert_symbol(a, c, v));
        }
    }
}

TEST_CASE("hilbert symbol is invariant under squares") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<long long> dist(-50, 50);
    for (int i = 0; i < 500; ++i) {
        long long a = dist(rng), b = dist(rng), t = dist(rng);
        if (a == 0 || b == 0 || t == 0) continue;
        for (const Place& v :
             {Place::infinite(), Place::finite(2), Place::finite(3), Place::finite(7)})
            REQUIRE(hilbert_symbol(a * t * t, b, v) == hilbert_symbol(a, b, v));
    }
}

TEST_CASE("hilbert symbol on rational arguments: a/b and a*b are in the same square class") {
    std::mt19937 rng(37);
    std::uniform_int_distribution<long long> dist(-150, 150);
    for (int i = 0; i < 800; ++i) {
        long long a = dist(rng), b = dist(rng), c = dist(rng);
        if (a == 0 || b == 0 || c == 0) continue;
        FactoredRational ratio = factorize(a) / factorize(b);
        FactoredRational fc = factorize(c);
        for (const Place& v : {Place::infinite(), Place::finite(2), Place::finite(3),
                               Place::finite(5), Place::finite(19)})
            REQUIRE(hilbert_symbol(ratio, fc, v) == hilbert_symbol(a * b, c, v));
    }
}

TEST_CASE("product formula over all places") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<long long> dist(-10'000, 10'000);
    for (int i = 0; i < 300; ++i) {
        long long a = dist(rng), b = dist(rng);
        if (a == 0 || b == 0) continue;
        FactoredRational fa = factorize(a), fb = factorize(b);
        int product = hilbert_symbol(fa, fb, Place::infinite());
        std::set<long long> primes{2};
        for (long long p : fa.support()) primes.insert(p);
        for (long long p : fb.support()) primes.insert(p);
        for (long long p : primes) product *= hilbert_symbol(fa, fb, Place::finite(p));
        REQUIRE(product == 1);
        // at any place away from 2ab both arguments are odd-prime units
        REQUIRE(hilbert_symbol(fa, fb, Place::finite(10'007)) == 1);
    }
}

TEST_CASE("closed form matches the solvability oracle on a dense small grid") {
    for (long long ell : {2, 3, 5, 7}) {
        for (long long a = -40; a <= 40; ++a) {
            if (a == 0) continue;
            for (long long b : {-39, -24, -19, -8, -6, -4, -3, -2, -1, 1, 2, 3, 5, 6, 18, 25}) {
                REQUIRE(hilbert_symbol(a, b, Place::finite(ell)) ==
                        hilbert_oracle(a, b, ell));
            }
        }
    }
}

TEST_CASE("oracle guards its search space") {
    CHECK_THROWS_AS(hilbert_oracle(0, 5, 3), validation_error);
    CHECK_THROWS_AS(hilbert_oracle(5, 3, 10), validation_error);
    // ord_ell large enough that ell^k overflows the modulus guard
    long long big = 129140163; // 3^17
    CHECK_THROWS_AS(hilbert_oracle(big * 3, big, 3), bound_error);
}

TEST_CASE("place construction") {
    CHECK(Place::finite(2).is_finite());
    CHECK(Place::finite(19).prime() == 19);
    CHECK(!Place::infinite().is_finite());
    CHECK_THROWS_AS(Place::finite(4), validation_error);
    CHECK_THROWS_AS(Place::infinite().prime(), validation_error);
}
