#include <doctest.h>

#include "arithdeg/diff_sets.hpp"

using namespace arithdeg;

TEST_CASE("validate_quaternion: pinned examples") {
    FieldData f19 = validate_field(-19);
    QuaternionData q = validate_quaternion(6, f19);
    CHECK(q.disc == 6);
    CHECK(q.r() == 2);
    CHECK(q.ramified_primes == std::vector<long long>{2, 3});
    CHECK_FALSE(q.degenerate);

    // -7 = 1 mod 8, so 2 splits in Q(sqrt(-7))
    FieldData f7 = validate_field(-7);
    CHECK_THROWS_WITH_AS(validate_quaternion(6, f7), doctest::Contains("prime 2"),
                         validation_error);

    QuaternionData degenerate = validate_quaternion(1, f19, true);
    CHECK(degenerate.degenerate);
    CHECK(degenerate.r() == 0);
    CHECK_THROWS_AS(validate_quaternion(1, f19), validation_error);

    CHECK_THROWS_AS(validate_quaternion(12, f19), validation_error); // not squarefree
    CHECK_THROWS_AS(validate_quaternion(30, f19), validation_error); // odd r
    CHECK_THROWS_AS(validate_quaternion(0, f19), validation_error);
    CHECK_THROWS_AS(validate_quaternion(-6, f19), validation_error);
}

TEST_CASE("local invariants of B") {
    FieldData f19 = validate_field(-19);
    QuaternionData q = validate_quaternion(6, f19);
    CHECK(local_invariant(q, Place::finite(2)) == -1);
    CHECK(local_invariant(q, Place::finite(3)) == -1);
    CHECK(local_invariant(q, Place::finite(5)) == 1);
    CHECK(local_invariant(q, Place::infinite()) == 1);

    QuaternionData degenerate = validate_quaternion(1, f19, true);
    for (const Place& v : {Place::finite(2), Place::finite(19), Place::infinite()})
        CHECK(local_invariant(degenerate, v) == 1);
}

TEST_CASE("diff_set: pinned examples, oracle-confirmed") {
    FieldData f19 = validate_field(-19);
    DiffSet d1 = diff_set(f19, 1);
    CHECK(d1.primes == std::vector<long long>{19});
    CHECK(d1.variant == DiffVariant::plain);
    // oracle confirmation at the only candidate places
    CHECK(hilbert_oracle(-19, -1, 2) == 1);
    CHECK(hilbert_oracle(-19, -1, 19) == -1);

    FieldData f4 = validate_field(-4);
    CHECK(diff_set(f4, 1).primes == std::vector<long long>{2});
    CHECK(hilbert_oracle(-4, -1, 2) == -1);

    CHECK_THROWS_AS(diff_set(f19, 0), validation_error);
}

TEST_CASE("diff_b_set: pinned examples, oracle-confirmed") {
    FieldData f19 = validate_field(-19);
    QuaternionData q6 = validate_quaternion(6, f19);

    DiffSet d6 = diff_b_set(f19, q6, 6);
    CHECK(d6.primes == std::vector<long long>{19});
    CHECK(d6.variant == DiffVariant::quaternionic);
    CHECK(hilbert_oracle(-19, -6, 2) == -1);  // cancels inv_2 = -1
    CHECK(hilbert_oracle(-19, -6, 3) == -1);  // cancels inv_3 = -1
    CHECK(hilbert_oracle(-19, -6, 19) == -1); // inv_19 = +1

    CHECK(diff_b_set(f19, q6, 1).primes == std::vector<long long>{2, 3, 19});

    QuaternionData degenerate = validate_quaternion(1, f19, true);
    DiffSet reduced = diff_b_set(f19, degenerate, 1);
    CHECK(reduced.primes == diff_set(f19, 1).primes);
    CHECK(reduced.variant == DiffVariant::quaternionic);
}

TEST_CASE("diff sets have odd cardinality and exclude split primes") {
    for (long long d_K : {-19, -43, -67}) {
        FieldData field = validate_field(d_K);
        QuaternionData q = validate_quaternion(6, field);
        for (long long m = 1; m <= 120; ++m) {
            DiffSet plain = diff_set(field, m);
            DiffSet quat = diff_b_set(field, q, m);
            REQUIRE(plain.primes.size() % 2 == 1);
            REQUIRE(quat.primes.size() % 2 == 1);
            for (long long p : quat.primes)
                REQUIRE(splitting_type(field, p).kind != SplitKind::split);
        }
    }
}

TEST_CASE("Diff_B structure over every valid pair with |d_K| <= 200") {
    long long pairs = 0;
    for (long long d_K = -200; d_K < 0; ++d_K) {
        FieldData field{};
        try {
            field = validate_field(d_K);
        } catch (const validation_error&) {
            continue;
        }
        for (long long d_B : {1, 6, 10, 14, 15, 21, 22, 26, 33, 34, 35}) {
            QuaternionData q{};
            try {
                q = validate_quaternion(d_B, field, true);
            } catch (const validation_error&) {
                continue;
            }
            ++pairs;
            for (long long m = 1; m <= 500; ++m) {
                DiffSet diff = diff_b_set(field, q, m);
                REQUIRE(diff.primes.size() % 2 == 1);
                for (long long p : diff.primes)
                    REQUIRE(splitting_type(field, p).kind != SplitKind::split);
            }
        }
    }
    CHECK(pairs > 100); // the sweep is not vacuous
}
