#pragma once

#include <gmpxx.h>

#include <vector>

namespace cubesum {

// Known-answer fixture: n = l1^e1 * l2^e2, the expected Selmer dimension of
// the associated 3-isogeny descent, and the Mordell-Weil rank of
// y^2 = x^3 - 432 n^2 over Q(zeta_3) as confirmed by independent
// computer-algebra descent computations.  The rank is recorded to exercise
// the implications rank <= t - 1 and rank == t - 1 (mod 2); it is not
// recomputed here.
struct ReferenceCase {
    long l1;
    int e1;
    long l2;
    int e2;
    int expected_dim;
    int known_rank;
};

const std::vector<ReferenceCase>& reference_cases();

// l1^e1 * l2^e2 as an integer.
mpz_class reference_n(const ReferenceCase& rc);

}  // namespace cubesum
