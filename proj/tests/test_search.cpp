#include <doctest.h>

#include <gmpxx.h>

#include "cubesum/errors.hpp"
#include "cubesum/search.hpp"

using namespace cubesum;

TEST_SUITE("search") {

TEST_CASE("known representations are found") {
    auto w = search_cube_sum(20, 10);
    REQUIRE(w.has_value());
    CHECK(w->a == 19);
    CHECK(w->b == 1);
    CHECK(w->c == 7);

    w = search_cube_sum(1729, 2);
    REQUIRE(w.has_value());
    CHECK(w->a == 12);
    CHECK(w->b == 1);
    CHECK(w->c == 1);

    w = search_cube_sum(7, 10);  // needs a negative coordinate
    REQUIRE(w.has_value());
    CHECK(w->a == 2);
    CHECK(w->b == -1);
    CHECK(w->c == 1);

    w = search_cube_sum(2, 10);
    REQUIRE(w.has_value());
    CHECK(w->a == 1);
    CHECK(w->b == 1);
    CHECK(w->c == 1);

    w = search_cube_sum(6, 50);  // denominator forced into 3Z
    REQUIRE(w.has_value());
    CHECK(w->a == 37);
    CHECK(w->b == 17);
    CHECK(w->c == 21);
}

TEST_CASE("witnesses satisfy the defining equation and are primitive") {
    for (long n : {2L, 6L, 7L, 9L, 13L, 15L, 17L, 20L, 1729L}) {
        auto w = search_cube_sum(n, 60);
        if (!w) continue;
        mpz_class lhs = w->a * w->a * w->a + w->b * w->b * w->b;
        mpz_class rhs = mpz_class(n) * w->c * w->c * w->c;
        CHECK(lhs == rhs);
        CHECK(w->c > 0);
        mpz_class g = gcd(gcd(w->a, w->b), w->c);
        CHECK(g == 1);
    }
}

TEST_CASE("provably insoluble n yields no witness") {
    CHECK_FALSE(search_cube_sum(14, 1000).has_value());
    CHECK_FALSE(search_cube_sum(3 * 3 * 3 + 1 + 4, 0).has_value());  // bound < 1
}

TEST_CASE("big-integer path agrees with the native path") {
    // a bound whose cube overflows the native fast path forces the
    // arbitrary-precision branch; the witness must be identical
    auto w = search_cube_sum(20, mpz_class(1) << 20);
    REQUIRE(w.has_value());
    CHECK(w->a == 19);
    CHECK(w->b == 1);
    CHECK(w->c == 7);

    // n == 3 (mod 63): both residue filters require 21 | c, so a small
    // bound terminates immediately even though n itself is huge
    mpz_class huge = (mpz_class(1) << 60) + 2;
    REQUIRE(huge % 63 == 3);
    CHECK_FALSE(search_cube_sum(huge, 20).has_value());
}

TEST_CASE("invalid inputs are rejected") {
    CHECK_THROWS_AS(search_cube_sum(0, 10), DomainError);
    CHECK_THROWS_AS(search_cube_sum(-5, 10), DomainError);
}

TEST_CASE("witnesses map to rational points on the cubic twist") {
    CubeSumWitness w{19, 1, 7};
    auto pt = witness_to_point(w, 20);
    CHECK(pt.u == 84);
    CHECK(pt.v == 648);

    CubeSumWitness ramanujan{12, 1, 1};
    pt = witness_to_point(ramanujan, 1729);
    CHECK(pt.u == 1596);
    CHECK(pt.v == 52668);

    CubeSumWitness neg{2, -1, 1};
    pt = witness_to_point(neg, 7);
    CHECK(pt.u == 84);
    CHECK(pt.v == 756);

    CubeSumWitness bad{1, -1, 1};
    CHECK_THROWS_AS(witness_to_point(bad, 2), DomainError);
}

}  // TEST_SUITE
