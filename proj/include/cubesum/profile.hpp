#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cubesum/eisenstein.hpp"
#include "cubesum/errors.hpp"

namespace cubesum {

struct PrimeFactor {
    mpz_class ell;
    int exp = 1;        // 1 or 2 (cube-free)
    int mod9 = 0;       // ell mod 9
    bool split = false; // ell == 1 (mod 3)
};

struct PrimeSplitting {
    Eisenstein pi;      // primary, zc > 0
    Eisenstein pi_bar;  // conj(pi), also primary
};

// Validated factorization profile of n = l1^e1 * l2^e2 (cube-free, coprime to
// 3, exactly two distinct primes).  Labeling rules:
//   * k1 == 1: the split prime is l1, whatever its size or exponent.
//   * k1 in {0, 2}: ascending by magnitude, except that the pattern l1*l2^2 is
//     relabeled so the squared prime comes first (recorded in `relabeled`).
struct TwoPrimeProfile {
    mpz_class n;
    int n_mod_9 = 0;
    PrimeFactor p1, p2;
    int k1 = 0;  // number of split primes (== 1 mod 3)
    int k2 = 0;  // number of inert primes (== 2 mod 3)
    bool relabeled = false;
    std::optional<PrimeSplitting> s1, s2;  // present for split p1 / p2

    // Cubic character exponents cached for the closed-form dimension rules
    // (0 means "is a cube").  Recomputed by recompute_symbols().
    std::optional<int> sym_l2_at_pi1;       // k1 == 1: character of l2 mod pi1
    std::optional<int> sym_pi1_at_pi2;      // k1 == 2: character of pi1 mod pi2
    std::optional<int> sym_pi1_bar_at_pi2;  // k1 == 2: character of conj(pi1) mod pi2
};

// Deterministic Miller-Rabin below 3.3e24 (fixed 12-base set), so in
// particular for every 64-bit input; larger inputs add 24 extra bases drawn
// from a generator seeded by the input (error bound <= 4^-24).
bool is_prime(const mpz_class& m);

// Factor n under the two-prime cube-free contract: trial division to 10^6,
// Miller-Rabin and a perfect-square test on the cofactor, and an
// iteration-capped Pollard rho for the remaining composite cases.  Returns
// the two (prime, exponent) pairs in ascending prime order.  Throws
// DomainError when n <= 1, 3 | n, n is not cube-free, n does not have exactly
// two distinct prime factors, or the factorization cap is exhausted.
std::vector<std::pair<mpz_class, int>> factor_two_primes(const mpz_class& n);

// Full validated profile: factorization, residues, splittings of the split
// primes, and the cached character exponents.
TwoPrimeProfile classify(const mpz_class& n, std::uint64_t seed = kDefaultSplitSeed);

// Recompute the cached character exponents from s1/s2.  Numerators are
// primary-normalized first, so the results do not depend on which associate
// or conjugate the stored splittings carry.  Used after perturbing a profile.
void recompute_symbols(TwoPrimeProfile& prof);

}  // namespace cubesum
