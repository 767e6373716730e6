#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "cubesum/eisenstein.hpp"
#include "cubesum/errors.hpp"
#include "cubesum/modular.hpp"

using namespace cubesum;

TEST_SUITE("modular") {

TEST_CASE("attached cube roots for the primes over 7") {
    CHECK(attached_cube_root(Eisenstein{2, 3}) == 4);
    CHECK(attached_cube_root(Eisenstein{-1, -3}) == 2);
    // the two roots of x^2 + x + 1 mod 7 sum to -1
    CHECK((4 + 2) % 7 == 6);
    CHECK((4 * 4 + 4 + 1) % 7 == 0);
    CHECK_THROWS_AS(attached_cube_root(Eisenstein{2, 0}), DomainError);
    CHECK_THROWS_AS(attached_cube_root(Eisenstein{1, -1}), DomainError);  // norm 3
}

TEST_CASE("cubic symbol is multiplicative and kills cubes") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> coeff(-30, 30);
    for (long ell : {7L, 13L, 19L, 31L, 37L}) {
        auto [pi, pib] = split_prime(ell);
        for (int i = 0; i < 200; ++i) {
            Eisenstein a{coeff(rng), coeff(rng)};
            Eisenstein b{coeff(rng), coeff(rng)};
            mpz_class r = attached_cube_root(pi);
            // skip arguments divisible by pi (residue 0)
            if ((a.re + a.zc * r) % ell == 0) continue;
            if ((b.re + b.zc * r) % ell == 0) continue;
            int sa = cubic_symbol(a, pi);
            int sb = cubic_symbol(b, pi);
            CHECK(cubic_symbol(a * b, pi) == (sa + sb) % 3);
            CHECK(cubic_symbol(a * a * a, pi) == 0);
            // conjugating both argument and modulus negates the exponent
            CHECK(cubic_symbol(conj(a), conj(pi)) == (3 - sa) % 3);
        }
    }
}

TEST_CASE("cubic symbol of zeta depends on ell mod 9") {
    // chi_pi(zeta) = zeta^((ell-1)/3), so the exponent is (ell-1)/3 mod 3.
    for (long ell : {7L, 13L, 19L, 31L, 37L, 43L, 61L, 67L, 73L, 79L, 97L, 103L, 109L}) {
        auto [pi, pib] = split_prime(ell);
        int expected = 0;
        switch (ell % 9) {
            case 1: expected = 0; break;
            case 4: expected = 1; break;
            case 7: expected = 2; break;
        }
        CHECK(cubic_symbol(Eisenstein{0, 1}, pi) == expected);
    }
}

TEST_CASE("cubic reciprocity for primary primes (spot check)") {
    std::vector<long> split = {7, 13, 19, 31, 37, 43, 61};
    for (std::size_t i = 0; i < split.size(); ++i) {
        for (std::size_t j = i + 1; j < split.size(); ++j) {
            auto [a, ab] = split_prime(split[i]);
            auto [b, bb] = split_prime(split[j]);
            CHECK(cubic_symbol(a, b) == cubic_symbol(b, a));
            CHECK(cubic_symbol(ab, bb) == cubic_symbol(bb, ab));
        }
    }
}

TEST_CASE("rational cube tests mod a prime") {
    CHECK(is_cube_mod_ell(29, 37));
    CHECK_FALSE(is_cube_mod_ell(317, 19));
    CHECK(is_cube_mod_ell(5, 11));  // 11 == 2 (mod 3): everything is a cube
    CHECK(is_cube_mod_ell(7, 2));
    CHECK_THROWS_AS(is_cube_mod_ell(1, 3), DomainError);
    CHECK_THROWS_AS(is_cube_mod_ell(14, 7), DomainError);  // divisible by ell

    // at a split prime exactly (ell-1)/3 of the nonzero residues are cubes
    for (long ell : {7L, 13L, 19L, 37L}) {
        long count = 0;
        for (long a = 1; a < ell; ++a) count += is_cube_mod_ell(a, ell) ? 1 : 0;
        CHECK(count == (ell - 1) / 3);
    }
    for (long ell : {2L, 5L, 11L, 17L}) {
        for (long a = 1; a < ell; ++a) CHECK(is_cube_mod_ell(a, ell));
    }
}

TEST_CASE("F_{ell^2} cube structure, exhaustively for small ell") {
    for (long ell : {2L, 5L, 11L, 17L}) {
        mpz_class L = ell;
        // all cubes of nonzero elements
        std::set<std::pair<long, long>> cubes;
        for (long a = 0; a < ell; ++a) {
            for (long b = 0; b < ell; ++b) {
                Fp2 z{a, b};
                if (z.is_zero()) continue;
                Fp2 c = fp2_mul(fp2_mul(z, z, L), z, L);
                cubes.insert({c.a.get_si(), c.b.get_si()});
            }
        }
        CHECK(cubes.size() == static_cast<std::size_t>((ell * ell - 1) / 3));
        for (long a = 0; a < ell; ++a) {
            for (long b = 0; b < ell; ++b) {
                Fp2 z{a, b};
                if (z.is_zero()) continue;
                bool in_set = cubes.count({a, b}) > 0;
                CHECK(is_cube_fp2(z, L) == in_set);
            }
        }
        // rational (b == 0) elements are always cubes at an inert place
        for (long a = 1; a < ell; ++a) CHECK(is_cube_fp2(Fp2{a, 0}, L));
    }
}

TEST_CASE("character of tau in F_{ell^2} depends on ell mod 9") {
    auto expected = [](long m9) {
        switch (m9) {
            case 8: return 0;
            case 2: return 1;
            default: return 2;  // 5
        }
    };
    for (long ell : {2L, 5L, 11L, 17L, 23L, 29L, 41L, 47L, 53L}) {
        CHECK(fp2_cubic_character(Fp2{0, 1}, ell) == expected(ell % 9));
    }
}

TEST_CASE("arithmetic in Z[zeta]/9") {
    CHECK(mod9_reduce(Eisenstein{-2, -6}) == Mod9{7, 3});
    CHECK(mod9_reduce_int(mpz_class(262)) == Mod9{1, 0});

    Mod9 u{7, 3};  // image of 1 + (1-zeta)^3
    CHECK(mod9_pow(u, 3) == Mod9{1, 0});
    CHECK(mod9_inv(u) == Mod9{4, 6});
    CHECK(mod9_mul(u, Mod9{4, 6}) == Mod9{1, 0});

    // zeta * zeta^2 = 1
    CHECK(mod9_mul(Mod9{0, 1}, Mod9{8, 8}) == Mod9{1, 0});

    CHECK(mod9_inv(Mod9{2, 0}) == Mod9{5, 0});
    CHECK_THROWS_AS(mod9_inv(Mod9{3, 0}), DomainError);
    CHECK_THROWS_AS(is_unit_cube_mod9(Mod9{3, 0}), DomainError);
}

TEST_CASE("unit group of Z[zeta]/9 and its cubes") {
    int units_count = 0;
    for (int re = 0; re < 9; ++re)
        for (int zc = 0; zc < 9; ++zc)
            if (mod9_is_unit(Mod9{re, zc})) ++units_count;
    CHECK(units_count == 54);

    // independent enumeration of the unit cubes
    std::set<std::pair<int, int>> cubes;
    for (int re = 0; re < 9; ++re)
        for (int zc = 0; zc < 9; ++zc) {
            Mod9 x{re, zc};
            if (!mod9_is_unit(x)) continue;
            Mod9 c = mod9_mul(mod9_mul(x, x), x);
            cubes.insert({c.re, c.zc});
        }
    CHECK(cubes == std::set<std::pair<int, int>>{{1, 0}, {8, 0}});

    const auto& table = unit_cubes_mod9();
    REQUIRE(table.size() == 2);
    CHECK(table[0] == Mod9{1, 0});
    CHECK(table[1] == Mod9{8, 0});
    CHECK(is_unit_cube_mod9(Mod9{8, 0}));
    CHECK_FALSE(is_unit_cube_mod9(Mod9{2, 0}));
    CHECK_FALSE(is_unit_cube_mod9(Mod9{7, 3}));
    CHECK_FALSE(is_unit_cube_mod9(Mod9{0, 1}));
}

}  // TEST_SUITE
