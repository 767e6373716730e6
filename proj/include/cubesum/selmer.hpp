#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "cubesum/errors.hpp"
#include "cubesum/modular.hpp"
#include "cubesum/profile.hpp"

namespace cubesum {

// The 3-isogeny Selmer group of y^2 = x^3 + 16 n^2 over Q(zeta) sits inside
// the group of S-units modulo cubes, S the primes over n.  Every class has a
// representative x = zeta^a0 * g1^a1 * ... * gm^am with exponents in F_3, and
// the Selmer element is the pair (x^2 mod cubes, x mod cubes); membership is
// a local condition at each place of S and at the prime above 3.
//
// Two independent evaluations are provided: dim_selmer_closed dispatches on
// the splitting/residue pattern of the two primes, dim_selmer_direct
// enumerates all 3^(m+1) candidates against the local conditions.  They must
// agree; disagreement is an InternalError in the callers that run both.

enum class SelmerMethod { ClosedForm, DirectEnumeration };

struct SelmerGenerator {
    std::string label;  // "zeta", "pi1", "pi1_bar", "l2", ...
    Eisenstein value;
};

// A finite place of Q(zeta) dividing n (all are prime to 3).
struct SelmerPlace {
    bool split = false;  // residue field F_ell (split) vs F_{ell^2} (inert)
    mpz_class ell;       // residue characteristic
    Eisenstein pi;       // uniformizer: the stored prime divisor, or ell itself
    int gen_index = 0;   // generator equal to this place's uniformizer
    int n_val = 0;       // valuation of n at the place
    std::vector<int> chi;  // cubic character exponent of each generator's
                           // image in the residue field (uniformizer slot: 0)
};

struct SelmerProblem {
    std::vector<SelmerGenerator> gens;  // gens[0] is always zeta
    std::vector<int> n_vec;             // exponents of n over the generators
    std::vector<SelmerPlace> places;    // one per non-unit generator
    int n_mod_9 = 0;
    bool n_pm1_mod9 = false;      // n == +-1 (mod 9)
    std::vector<Mod9> gens_mod9;  // reductions of the generators
    Mod9 first_gen_inv;           // inverse of n (or of zeta when n == +-1) mod 9
    Mod9 aux_unit_inv;            // inverse of 1 + (1-zeta)^3 mod 9
};

struct CandidateTrace {
    std::vector<int> exps;         // exponent vector over the generators
    std::vector<bool> place_pass;  // one entry per place in SelmerProblem
    bool p_pass = false;           // condition at the prime above 3
    bool accepted = false;
};

struct SelmerReport {
    int dim = 0;
    SelmerMethod method = SelmerMethod::ClosedForm;
    // Direct enumeration only:
    long accepted_count = 0;               // == 3^dim
    std::vector<std::string> basis;        // echelonized over F_3
    std::vector<CandidateTrace> trace;     // all 3^(m+1) candidates
};

// S-unit generator data for a two-prime profile:
//   k1 == 0: [zeta, l1, l2]
//   k1 == 1: [zeta, pi1, pi1_bar, l2]
//   k1 == 2: [zeta, pi1, pi1_bar, pi2, pi2_bar]
SelmerProblem build_selmer_problem(const TwoPrimeProfile& prof);

// Generalization used by the all-inert rule: any number of distinct inert
// primes (== 2 mod 3) with cube-free exponents.
SelmerProblem build_all_inert_problem(const std::vector<std::pair<mpz_class, int>>& primes);

// Local condition at places[place_idx]: for some j in {0,1,2} the twist
// x * n^{-j} has valuation divisible by 3 and a unit part that is a cube in
// the residue field.
bool local_condition_at_q(const SelmerProblem& prob, const std::vector<int>& x,
                          std::size_t place_idx);

// Local condition at the prime above 3: for some j, k in {0,1,2} the product
// x * g^{-j} * (1 + (1-zeta)^3)^{-k} is a unit cube mod 9, where g is n --
// or zeta instead when n == +-1 (mod 9).
bool local_condition_at_p(const SelmerProblem& prob, const std::vector<int>& x);

// Enumerate all candidates; verify the accepted set is a subgroup of
// 3-power order containing the class of n.
SelmerReport dim_selmer_direct(const SelmerProblem& prob);
SelmerReport dim_selmer_direct(const TwoPrimeProfile& prof);

// Dimension by the residue/splitting pattern of the profile (no enumeration).
SelmerReport dim_selmer_closed(const TwoPrimeProfile& prof);

// Closed form for any number k of inert primes: k when n != +-1 (mod 9),
// k + 1 when every prime is 8 mod 9, k - 1 otherwise.
int dim_selmer_all_inert(const std::vector<std::pair<mpz_class, int>>& primes);

// Run both methods and insist they agree; returns the direct report with the
// agreed dimension.  Throws InternalError on disagreement.
SelmerReport dim_selmer_checked(const TwoPrimeProfile& prof);

}  // namespace cubesum
