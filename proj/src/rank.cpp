#include "cubesum/rank.hpp"

#include "cubesum/errors.hpp"

namespace cubesum {

int root_number(const TwoPrimeProfile& prof) {
    int sign = (prof.k2 % 2 == 0) ? 1 : -1;
    bool pm1 = (prof.n_mod_9 == 1 || prof.n_mod_9 == 8);
    if (!pm1) sign = -sign;  // the place above 3 contributes -1
    return sign;
}

RankVerdict rank_verdict(int t, const TwoPrimeProfile& prof) {
    int s_size = 2 * prof.k1 + prof.k2;  // primes of Q(zeta) over n
    if (t < 1 || t > s_size + 1)
        throw DomainError("selmer dimension " + std::to_string(t) +
                          " outside the possible range [1, " +
                          std::to_string(s_size + 1) + "]");
    RankVerdict v;
    v.t = t;
    v.rank_upper = t - 1;
    v.parity = (t - 1) % 2;
    for (int r = v.parity; r <= v.rank_upper; r += 2) v.possible_ranks.push_back(r);
    v.rank_zero_unconditional = (t == 1);
    if (t == 1)
        v.cube_sum = CubeSumStatus::ProvenNotCubeSum;
    else if (t % 2 == 0)
        v.cube_sum = CubeSumStatus::CubeSumIfShaEven;
    else
        v.cube_sum = CubeSumStatus::EvenRankSetIfShaEven;
    v.root_number = root_number(prof);
    return v;
}

void consistency_check(const RankVerdict& v, const TwoPrimeProfile& prof) {
    int expected = (v.t - 1) % 2 == 0 ? 1 : -1;
    if (v.root_number != expected)
        throw InternalError("root number " + std::to_string(v.root_number) +
                            " inconsistent with selmer dimension " +
                            std::to_string(v.t) + " for n = " + prof.n.get_str());
    bool pm1 = (prof.n_mod_9 == 1 || prof.n_mod_9 == 8);
    int s_size = 2 * prof.k1 + prof.k2;
    if (!pm1 && v.t > s_size)
        throw InternalError("selmer dimension exceeds |S_n| away from +-1 mod 9");
}

std::string to_string(CubeSumStatus s) {
    switch (s) {
        case CubeSumStatus::ProvenNotCubeSum: return "proven_not";
        case CubeSumStatus::CubeSumIfShaEven: return "cube_sum_if_sha_even";
        case CubeSumStatus::EvenRankSetIfShaEven: return "even_rank_set_if_sha_even";
        case CubeSumStatus::Undetermined: return "undetermined";
    }
    return "undetermined";
}

}  // namespace cubesum
