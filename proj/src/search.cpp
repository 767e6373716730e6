#include "cubesum/search.hpp"

#include <array>
#include <cmath>
#include <cstdint>

#include "cubesum/errors.hpp"

namespace cubesum {

namespace {

// a^3 + b^3 can only hit residues {0, +-1, +-2} mod 9 and mod 7 (cubes are
// {0, +-1} in both moduli), so most c are rejected before any cube root.
constexpr std::array<int, 9> kOk9 = {1, 1, 1, 0, 0, 0, 0, 1, 1};
constexpr std::array<int, 7> kOk7 = {1, 1, 1, 0, 0, 1, 1};

template <typename I>
I cube(const I& x) {
    return x * x * x;
}

long icbrt(long t) {
    if (t <= 0) return 0;
    auto r = static_cast<long>(std::cbrt(static_cast<double>(t)));
    while (r > 0 && cube(r) > t) --r;
    while (cube(r + 1) <= t) ++r;
    return r;
}

mpz_class icbrt(const mpz_class& t) {
    if (t <= 0) return 0;
    mpz_class r;
    mpz_root(r.get_mpz_t(), t.get_mpz_t(), 3);
    return r;
}

int mod_small(long x, int m) { return static_cast<int>(x % m); }
int mod_small(const mpz_class& x, int m) {
    return static_cast<int>(mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(m)));
}

// Scan c ascending; for each c search a^3 + b^3 = n c^3 over the window
// a in (A0, 2(A0+1)] with b < 0 first, then a <= A0 with b >= 0, where
// A0 = floor((n c^3)^(1/3)).  Both sweeps move a downward with a matched
// second pointer, so each c costs O(A0) integer operations.
template <typename I>
std::optional<std::array<I, 3>> search_core(const I& n, const I& bound) {
    for (I c = 1; c <= bound; ++c) {
        I T = n * cube(c);
        if (!kOk9[static_cast<std::size_t>(mod_small(T, 9))]) continue;
        if (!kOk7[static_cast<std::size_t>(mod_small(T, 7))]) continue;
        I A0 = icbrt(T);
        I amax = 2 * (A0 + 1);

        I d = icbrt(cube(amax) - T);
        for (I a = amax; a > A0; --a) {
            I diff = cube(a) - T;
            while (d > 1 && cube(d) > diff) --d;
            if (d >= 1 && cube(d) == diff) return std::array<I, 3>{a, I(-d), c};
        }

        I a = A0, b = 0;
        while (a >= b) {
            I s = cube(a) + cube(b);
            if (s < T)
                ++b;
            else if (s > T)
                --a;
            else
                return std::array<I, 3>{a, b, c};
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<CubeSumWitness> search_cube_sum(const mpz_class& n,
                                              const mpz_class& bound) {
    if (n < 1) throw DomainError("search requires n >= 1");
    if (bound < 1) return std::nullopt;

    std::optional<std::array<mpz_class, 3>> hit;
    mpz_class peak = n * cube(bound);
    if (mpz_sizeinbase(peak.get_mpz_t(), 2) <= 56) {
        auto h = search_core<long>(n.get_si(), bound.get_si());
        if (h)
            hit = std::array<mpz_class, 3>{mpz_class((*h)[0]), mpz_class((*h)[1]),
                                           mpz_class((*h)[2])};
    } else {
        hit = search_core<mpz_class>(n, bound);
    }
    if (!hit) return std::nullopt;

    CubeSumWitness w{(*hit)[0], (*hit)[1], (*hit)[2]};
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), w.a.get_mpz_t(), w.b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w.c.get_mpz_t());
    if (g > 1) {
        w.a /= g;
        w.b /= g;
        w.c /= g;
    }
    if (cube(w.a) + cube(w.b) != n * cube(w.c))
        throw InternalError("search produced a non-solution");
    return w;
}

CurvePoint witness_to_point(const CubeSumWitness& w, const mpz_class& n) {
    mpz_class den = w.a + w.b;
    if (den == 0) throw DomainError("witness has a + b == 0, no affine point");
    CurvePoint pt;
    pt.u = mpq_class(12 * n * w.c, den);
    pt.u.canonicalize();
    pt.v = mpq_class(36 * n * (w.a - w.b), den);
    pt.v.canonicalize();
    mpq_class lhs = pt.v * pt.v;
    mpq_class rhs = pt.u * pt.u * pt.u - mpq_class(432 * n * n);
    if (lhs != rhs) throw InternalError("witness point fails the curve equation");
    return pt;
}

}  // namespace cubesum
