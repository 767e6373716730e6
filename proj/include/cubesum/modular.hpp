#pragma once

#include <gmpxx.h>

#include <vector>

#include "cubesum/eisenstein.hpp"
#include "cubesum/errors.hpp"

namespace cubesum {

// ---- cubic residue characters at split primes ------------------------------

// For pi = a + b*zeta of prime norm ell == 1 (mod 3), the residue field
// Z[zeta]/(pi) is F_ell and zeta maps to r = -a * b^{-1} (mod ell), the root
// of x^2 + x + 1 attached to pi (pi divides r - zeta).  Any associate of pi
// gives the same r.  Throws DomainError if pi is not such a divisor.
mpz_class attached_cube_root(const Eisenstein& pi);

// Cubic residue character exponent k in {0, 1, 2}, defined by
// alpha^((ell-1)/3) == zeta^k (mod pi).  Multiplicative in alpha; k == 0
// exactly when alpha is a cube in the residue field.  Throws DomainError when
// pi does not have prime norm == 1 (mod 3) or when pi divides alpha.
int cubic_symbol(const Eisenstein& alpha, const Eisenstein& pi);

// Exponent k with a^((ell-1)/3) == r^k in F_ell, for a prime ell == 1 (mod 3)
// and a cube root of unity r.  Throws DomainError when ell | a.
int fp_cubic_character(const mpz_class& a, const mpz_class& ell, const mpz_class& r);

// Is a a cube mod the prime ell (ell != 3)?  For ell == 2 (mod 3) cubing is a
// bijection on F_ell^*, so every unit is a cube; for ell == 1 (mod 3) the
// cubes are the kernel of a -> a^((ell-1)/3).  Throws DomainError when
// ell == 3 (mod 3 there are no well-defined cube classes for our purposes) or
// when ell | a.
bool is_cube_mod_ell(const mpz_class& a, const mpz_class& ell);

// ---- the quadratic extension F_{ell^2} for inert ell == 2 (mod 3) ----------

// Realized as F_ell[tau]/(tau^2 + tau + 1); tau is a primitive cube root of
// unity, and reduction of Z[zeta] sends zeta to tau.
struct Fp2 {
    mpz_class a, b;  // a + b*tau, both reduced mod ell

    bool is_zero() const { return a == 0 && b == 0; }
    friend bool operator==(const Fp2&, const Fp2&) = default;
};

Fp2 fp2_reduce(const Eisenstein& x, const mpz_class& ell);
Fp2 fp2_mul(const Fp2& x, const Fp2& y, const mpz_class& ell);
Fp2 fp2_pow(const Fp2& base, const mpz_class& exp, const mpz_class& ell);

// Exponent k with z^((ell^2-1)/3) == tau^k.  Throws DomainError on z == 0.
int fp2_cubic_character(const Fp2& z, const mpz_class& ell);

// z != 0 a cube in F_{ell^2}?  Equivalent to fp2_cubic_character(z) == 0.
bool is_cube_fp2(const Fp2& z, const mpz_class& ell);

// ---- the ring Z[zeta]/9 -----------------------------------------------------

// (1-zeta)^4 = 9*zeta^2, so Z[zeta]/9 is reduction modulo the fourth power of
// the prime above 3 -- exactly deep enough to decide whether a local unit
// there is a cube: the unit cubes mod 9 turn out to be {1, -1} (enumerated,
// never assumed).
struct Mod9 {
    int re = 0, zc = 0;  // both in 0..8

    friend bool operator==(const Mod9&, const Mod9&) = default;
};

Mod9 mod9_reduce(const Eisenstein& x);
Mod9 mod9_reduce_int(const mpz_class& x);
Mod9 mod9_mul(const Mod9& x, const Mod9& y);
Mod9 mod9_pow(Mod9 base, int exp);  // exp >= 0
bool mod9_is_unit(const Mod9& x);

// Multiplicative inverse; throws DomainError on a non-unit.
Mod9 mod9_inv(const Mod9& x);

// The set {u^3 : u a unit of Z[zeta]/9}, enumerated over all 54 units and
// deduplicated.  Sorted by (re, zc).
const std::vector<Mod9>& unit_cubes_mod9();

// Membership of x in unit_cubes_mod9(); throws DomainError on a non-unit.
bool is_unit_cube_mod9(const Mod9& x);

std::string to_string(const Mod9& x);

}  // namespace cubesum
