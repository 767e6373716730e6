#include "cubesum/reference_cases.hpp"

namespace cubesum {

const std::vector<ReferenceCase>& reference_cases() {
    // {l1, e1, l2, e2, expected Selmer dim, known rank over Q(zeta_3)}
    static const std::vector<ReferenceCase> table = {
        // dimension 1: rank 0 unconditionally, not a sum of two cubes
        {2, 1, 131, 1, 1, 0},
        {2, 2, 131, 2, 1, 0},
        {11, 2, 29, 1, 1, 0},
        {5, 2, 41, 1, 1, 0},
        {19, 1, 317, 1, 1, 0},
        {19, 2, 317, 2, 1, 0},
        {37, 1, 131, 1, 1, 0},
        {37, 2, 131, 2, 1, 0},
        {97, 1, 17, 2, 1, 0},
        {97, 2, 17, 2, 1, 0},
        // dimension 2: odd rank, here rank 1
        {281, 1, 89, 1, 2, 1},
        {281, 2, 89, 2, 2, 1},
        {73, 2, 269, 1, 2, 1},
        {139, 1, 389, 1, 2, 1},
        {139, 2, 389, 2, 2, 1},
        {157, 2, 19, 1, 2, 1},
        {157, 1, 19, 2, 2, 1},
        // dimension 3: even rank in {0, 2}
        {53, 2, 71, 1, 3, 2},
        {53, 1, 71, 1, 3, 0},
        {53, 2, 71, 2, 3, 0},
        {37, 2, 29, 1, 3, 0},
        {37, 1, 29, 1, 3, 2},
        {37, 2, 29, 2, 3, 2},
        {157, 2, 193, 1, 3, 2},
        {157, 1, 193, 2, 3, 0},
        {73, 1, 19, 1, 3, 2},
        {73, 2, 19, 2, 3, 0},
        // dimension 4: odd rank in {1, 3}
        {19, 1, 467, 1, 4, 3},
        {19, 2, 467, 1, 4, 1},
        {19, 1, 467, 2, 4, 1},
        {19, 2, 467, 2, 4, 1},
        {103, 1, 13, 1, 4, 3},
        {103, 2, 13, 2, 4, 1},
        // dimension 5: even rank in {0, 2, 4}
        {199, 1, 109, 1, 5, 4},
        {199, 2, 109, 1, 5, 2},
        {199, 1, 109, 2, 5, 0},
        {199, 2, 109, 2, 5, 0},
    };
    return table;
}

mpz_class reference_n(const ReferenceCase& rc) {
    mpz_class n = rc.l1;
    if (rc.e1 == 2) n *= rc.l1;
    n *= rc.l2;
    if (rc.e2 == 2) n *= rc.l2;
    return n;
}

}  // namespace cubesum
