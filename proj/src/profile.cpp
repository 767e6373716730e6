#include "cubesum/profile.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "cubesum/modular.hpp"

namespace cubesum {

namespace {

mpz_class powm(const mpz_class& base, const mpz_class& exp, const mpz_class& mod) {
    mpz_class out;
    mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return out;
}

// One Miller-Rabin round; true means "probably prime".
bool mr_round(const mpz_class& m, const mpz_class& base, const mpz_class& d, unsigned s) {
    mpz_class b = base % m;
    if (b == 0) return true;
    mpz_class x = powm(b, d, m);
    if (x == 1 || x == m - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
        x = (x * x) % m;
        if (x == m - 1) return true;
    }
    return false;
}

bool miller_rabin(const mpz_class& m) {
    mpz_class d = m - 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    // Complete for m < 3,317,044,064,679,887,385,961,981 (~3.3e24 > 2^64).
    static const unsigned bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned b : bases) {
        if (!mr_round(m, b, d, s)) return false;
    }
    if (mpz_sizeinbase(m.get_mpz_t(), 2) > 81) {
        // Beyond the proven range: 24 extra bases, error bound <= 4^-24.
        std::mt19937_64 rng(0xb10cba5e ^ mpz_fdiv_ui(m.get_mpz_t(), ~0UL));
        for (int i = 0; i < 24; ++i) {
            mpz_class b = (mpz_class(rng()) << 64) | mpz_class(rng());
            b = b % (m - 3) + 2;
            if (!mr_round(m, b, d, s)) return false;
        }
    }
    return true;
}

mpz_class gcd_z(const mpz_class& a, const mpz_class& b) {
    mpz_class out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

// Brent-variant Pollard rho; returns a nontrivial factor of odd composite m,
// or 0 when the iteration cap is exhausted.
mpz_class pollard_brent(const mpz_class& m) {
    for (unsigned c = 1; c <= 32; ++c) {
        mpz_class y = 2, x, ys, q = 1, g = 1;
        unsigned long r = 1;
        const unsigned long batch = 128;
        unsigned long spent = 0, cap = 1UL << 22;
        while (g == 1 && spent < cap) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % m;
            for (unsigned long k = 0; k < r && g == 1; k += batch) {
                ys = y;
                unsigned long lim = std::min(batch, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % m;
                    q = q * ((x - y) % m) % m;
                }
                g = gcd_z(mpz_class(abs(q)), m);
                spent += lim;
            }
            r <<= 1;
        }
        if (g == m) {
            // Backtrack one step at a time to pull the factor apart.
            do {
                ys = (ys * ys + c) % m;
                g = gcd_z(mpz_class(abs(x - ys)), m);
            } while (g == 1);
        }
        if (g != m && g > 1) return g;
    }
    return 0;
}

// Split x (> 1, coprime to 3, no prime factor <= 10^6) into the counts map.
void factor_collect(const mpz_class& x, std::map<mpz_class, int>& counts, int depth) {
    if (x == 1) return;
    if (depth > 16) throw DomainError("factor_two_primes: unable to factor cofactor");
    if (is_prime(x)) {
        counts[x] += 1;
        return;
    }
    if (mpz_perfect_square_p(x.get_mpz_t())) {
        mpz_class s;
        mpz_sqrt(s.get_mpz_t(), x.get_mpz_t());
        factor_collect(s, counts, depth + 1);
        factor_collect(s, counts, depth + 1);
        return;
    }
    mpz_class d = pollard_brent(x);
    if (d == 0) {
        throw DomainError("factor_two_primes: unable to factor " + x.get_str() +
                          " (cofactor too hard)");
    }
    factor_collect(d, counts, depth + 1);
    factor_collect(x / d, counts, depth + 1);
}

}  // namespace

bool is_prime(const mpz_class& m) {
    if (m < 2) return false;
    static const unsigned small[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                     41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    for (unsigned p : small) {
        if (m == p) return true;
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) return false;
    }
    return miller_rabin(m);
}

std::vector<std::pair<mpz_class, int>> factor_two_primes(const mpz_class& n) {
    if (n <= 1) throw DomainError("factor_two_primes: n must be at least 2, got " + n.get_str());
    if (mpz_divisible_ui_p(n.get_mpz_t(), 3)) {
        throw DomainError("factor_two_primes: n = " + n.get_str() + " is divisible by 3");
    }

    std::map<mpz_class, int> counts;
    mpz_class m = n;
    auto strip = [&](unsigned long p) {
        if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) return;
        int e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            m /= static_cast<unsigned long>(p);
            ++e;
        }
        counts[mpz_class(p)] = e;
    };
    strip(2);
    // Odd trial divisors 5, 7, 11, 13, ... (6k +- 1; 3 cannot divide).
    for (unsigned long p = 5, step = 2; p <= 1000000UL && m > 1; p += step, step = 6 - step) {
        if (counts.size() > 2) break;
        strip(p);
        mpz_class psq = mpz_class(p) * p;
        if (psq > m) break;
    }
    if (m > 1) factor_collect(m, counts, 0);

    for (const auto& [p, e] : counts) {
        if (e >= 3) {
            throw DomainError("factor_two_primes: n = " + n.get_str() + " is not cube-free (" +
                              p.get_str() + "^" + std::to_string(e) + ")");
        }
    }
    if (counts.size() != 2) {
        throw DomainError("factor_two_primes: n = " + n.get_str() + " has " +
                          std::to_string(counts.size()) + " distinct prime factors, need exactly 2");
    }
    std::vector<std::pair<mpz_class, int>> out(counts.begin(), counts.end());
    return out;  // std::map iterates in ascending prime order
}

TwoPrimeProfile classify(const mpz_class& n, std::uint64_t seed) {
    auto fac = factor_two_primes(n);

    auto make = [](const std::pair<mpz_class, int>& f) {
        PrimeFactor p;
        p.ell = f.first;
        p.exp = f.second;
        p.mod9 = static_cast<int>(mpz_fdiv_ui(f.first.get_mpz_t(), 9));
        p.split = mpz_fdiv_ui(f.first.get_mpz_t(), 3) == 1;
        return p;
    };
    TwoPrimeProfile prof;
    prof.n = n;
    prof.n_mod_9 = static_cast<int>(mpz_fdiv_ui(n.get_mpz_t(), 9));
    prof.p1 = make(fac[0]);
    prof.p2 = make(fac[1]);
    prof.k1 = (prof.p1.split ? 1 : 0) + (prof.p2.split ? 1 : 0);
    prof.k2 = 2 - prof.k1;

    if (prof.k1 == 1) {
        if (!prof.p1.split) std::swap(prof.p1, prof.p2);  // split prime is l1
    } else if (prof.p1.exp == 1 && prof.p2.exp == 2) {
        std::swap(prof.p1, prof.p2);  // squared prime first: l1*l2^2 -> l1^2*l2
        prof.relabeled = true;
    }

    if (prof.p1.split) prof.s1 = [&] {
        auto [pi, pb] = split_prime(prof.p1.ell, seed);
        return PrimeSplitting{pi, pb};
    }();
    if (prof.p2.split) prof.s2 = [&] {
        auto [pi, pb] = split_prime(prof.p2.ell, seed);
        return PrimeSplitting{pi, pb};
    }();

    recompute_symbols(prof);
    return prof;
}

void recompute_symbols(TwoPrimeProfile& prof) {
    prof.sym_l2_at_pi1.reset();
    prof.sym_pi1_at_pi2.reset();
    prof.sym_pi1_bar_at_pi2.reset();
    if (prof.k1 == 1) {
        Eisenstein pi = primary_associate(prof.s1->pi);
        prof.sym_l2_at_pi1 = cubic_symbol(Eisenstein{prof.p2.ell, 0}, pi);
    } else if (prof.k1 == 2) {
        // The character is attached to the ideal (pi2), so the modulus needs
        // no normalization; the numerators do.
        Eisenstein a1 = primary_associate(prof.s1->pi);
        prof.sym_pi1_at_pi2 = cubic_symbol(a1, prof.s2->pi);
        prof.sym_pi1_bar_at_pi2 = cubic_symbol(conj(a1), prof.s2->pi);
    }
}

}  // namespace cubesum
