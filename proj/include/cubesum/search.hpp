#pragma once

#include <gmpxx.h>

#include <optional>

namespace cubesum {

// A solution of a^3 + b^3 = n * c^3 in coprime integers, a >= |b|, c >= 1.
struct CubeSumWitness {
    mpz_class a, b, c;
};

// Bounded search: for c = 1..bound ascending, look for a^3 + b^3 = n c^3 by a
// two-pointer sweep over a (descending) against b (or -b).  Residue filters
// mod 9 and mod 7 discard most c before any cube root is taken.  Returns the
// first solution found, gcd-reduced, or nullopt.
std::optional<CubeSumWitness> search_cube_sum(const mpz_class& n, const mpz_class& bound);

// Rational point on v^2 = u^3 - 432 n^2 built from a witness:
//   u = 12 n c / (a + b),  v = 36 n (a - b) / (a + b).
struct CurvePoint {
    mpq_class u, v;
};

// Throws DomainError when a + b == 0; InternalError if the produced point
// fails the curve equation.
CurvePoint witness_to_point(const CubeSumWitness& w, const mpz_class& n);

}  // namespace cubesum
