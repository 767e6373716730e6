#pragma once

#include <string>
#include <vector>

#include "cubesum/profile.hpp"

namespace cubesum {

// What the Selmer dimension t proves about n as a sum of two rational cubes
// (equivalently about rational points on x^3 + y^3 = n).
enum class CubeSumStatus {
    ProvenNotCubeSum,       // t == 1: rank 0 unconditionally, no points
    CubeSumIfShaEven,       // t even: odd rank if Sha(E_n/K)[3] is "even",
                            //         hence a point
    EvenRankSetIfShaEven,   // t odd >= 3: rank lands in the even set under the
                            //             same hypothesis; no point implied
    Undetermined,
};

struct RankVerdict {
    int t = 0;                        // Selmer dimension over F_3
    int rank_upper = 0;               // t - 1
    int parity = 0;                   // rank parity forced by t (0 or 1)
    std::vector<int> possible_ranks;  // {parity, parity+2, ..., t-1}
    bool rank_zero_unconditional = false;
    CubeSumStatus cube_sum = CubeSumStatus::Undetermined;
    int root_number = 1;  // +1 or -1, from the local data of the profile
};

// Global root number of E_n: y^2 = x^3 - 432 n^2 over Q, computed from the
// local factorization data: (-1)^k2 when n == +-1 (mod 9), and an extra sign
// from the place above 3 otherwise.
int root_number(const TwoPrimeProfile& prof);

// Interpret the Selmer dimension.  Throws DomainError when t is outside the
// a-priori window 1 <= t <= 2*k1 + k2 + 1.
RankVerdict rank_verdict(int t, const TwoPrimeProfile& prof);

// Internal consistency: root number must equal (-1)^(t-1), the parity
// constraint; and t <= |S_n| when n != +-1 (mod 9).  Throws InternalError.
void consistency_check(const RankVerdict& v, const TwoPrimeProfile& prof);

std::string to_string(CubeSumStatus s);

}  // namespace cubesum
