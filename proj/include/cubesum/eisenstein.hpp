#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <utility>

#include "cubesum/errors.hpp"

namespace cubesum {

// An element a + b*zeta of the ring Z[zeta], where zeta = (-1+sqrt(-3))/2 is
// a primitive cube root of unity (zeta^2 + zeta + 1 = 0).  The ring is
// Euclidean for the norm N(a + b*zeta) = a^2 - a*b + b^2, its unit group is
// {+-1, +-zeta, +-zeta^2}, and 1 - zeta generates the unique prime above 3.
struct Eisenstein {
    mpz_class re;  // coefficient of 1
    mpz_class zc;  // coefficient of zeta

    Eisenstein() : re(0), zc(0) {}
    Eisenstein(mpz_class r, mpz_class z) : re(std::move(r)), zc(std::move(z)) {}

    bool is_zero() const { return re == 0 && zc == 0; }
    bool is_unit() const;

    friend bool operator==(const Eisenstein&, const Eisenstein&) = default;
};

Eisenstein operator+(const Eisenstein& a, const Eisenstein& b);
Eisenstein operator-(const Eisenstein& a, const Eisenstein& b);
Eisenstein operator-(const Eisenstein& a);
Eisenstein operator*(const Eisenstein& a, const Eisenstein& b);

mpz_class norm(const Eisenstein& a);

// Complex conjugation: a + b*zeta  ->  (a - b) - b*zeta.
Eisenstein conj(const Eisenstein& a);

std::string to_string(const Eisenstein& a);

// zeta^k (k taken mod 3).
Eisenstein zeta_pow(int k);

// The six units 1, -1, zeta, -zeta, zeta^2, -zeta^2.
const std::array<Eisenstein, 6>& units();

// Euclidean division: a = q*b + r with N(r) < N(b).  q is the lattice point
// nearest the exact quotient a*conj(b)/N(b), each coordinate rounded to the
// nearest integer with half-way ties toward zero.  Throws DomainError when
// b == 0.
std::pair<Eisenstein, Eisenstein> divmod(const Eisenstein& a, const Eisenstein& b);

// Greatest common divisor, determined up to a unit factor.  gcd(0, 0) == 0.
Eisenstein gcd(Eisenstein a, Eisenstein b);

// The unique associate u*z (u a unit) with re == 2 (mod 3) and zc == 0
// (mod 3).  Exactly one of the six associates qualifies when 3 does not
// divide N(z); throws DomainError otherwise (including z == 0).
Eisenstein primary_associate(const Eisenstein& z);

inline constexpr std::uint64_t kDefaultSplitSeed = 0x5eedc0de1234abcdULL;

// Factor a rational prime ell == 1 (mod 3) as pi * conj(pi).  Both returned
// elements are primary; the first has zc > 0 and the second is its conjugate.
// The search for a cube root of unity mod ell draws random bases from a
// generator seeded by (seed, ell), so runs are reproducible and the result is
// independent of the seed (the normalization is canonical).  Throws
// DomainError when ell is not a prime congruent to 1 mod 3.
std::pair<Eisenstein, Eisenstein> split_prime(const mpz_class& ell,
                                              std::uint64_t seed = kDefaultSplitSeed);

}  // namespace cubesum
