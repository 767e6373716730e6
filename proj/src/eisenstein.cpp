#include "cubesum/eisenstein.hpp"

#include <random>

namespace cubesum {

namespace {

// Nearest integer to num/den for den > 0; half-way ties round toward zero.
mpz_class round_nearest(const mpz_class& num, const mpz_class& den) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    mpz_class twice = 2 * r;  // 0 <= r < den
    if (twice < den) return q;
    if (twice > den) return q + 1;
    // Tie: the exact quotient is q + 1/2, negative exactly when q < 0.
    return q >= 0 ? q : q + 1;
}

int mod3(const mpz_class& x) {
    return static_cast<int>(mpz_fdiv_ui(x.get_mpz_t(), 3));
}

mpz_class powm(const mpz_class& base, const mpz_class& exp, const mpz_class& mod) {
    mpz_class out;
    mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return out;
}

}  // namespace

bool Eisenstein::is_unit() const { return norm(*this) == 1; }

Eisenstein operator+(const Eisenstein& a, const Eisenstein& b) {
    return {a.re + b.re, a.zc + b.zc};
}

Eisenstein operator-(const Eisenstein& a, const Eisenstein& b) {
    return {a.re - b.re, a.zc - b.zc};
}

Eisenstein operator-(const Eisenstein& a) { return {-a.re, -a.zc}; }

// (a + b*zeta)(c + d*zeta) = ac - bd + (ad + bc - bd)*zeta, using
// zeta^2 = -1 - zeta.
Eisenstein operator*(const Eisenstein& a, const Eisenstein& b) {
    mpz_class bd = a.zc * b.zc;
    return {a.re * b.re - bd, a.re * b.zc + a.zc * b.re - bd};
}

mpz_class norm(const Eisenstein& a) { return a.re * a.re - a.re * a.zc + a.zc * a.zc; }

Eisenstein conj(const Eisenstein& a) { return {a.re - a.zc, -a.zc}; }

std::string to_string(const Eisenstein& a) {
    if (a.zc == 0) return a.re.get_str();
    std::string zeta_part;
    if (a.zc == 1) {
        zeta_part = "zeta";
    } else if (a.zc == -1) {
        zeta_part = "-zeta";
    } else {
        zeta_part = a.zc.get_str() + "*zeta";
    }
    if (a.re == 0) return zeta_part;
    if (a.zc > 0) return a.re.get_str() + "+" + zeta_part;
    return a.re.get_str() + zeta_part;  // zeta_part already carries the sign
}

Eisenstein zeta_pow(int k) {
    switch (((k % 3) + 3) % 3) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        default: return {-1, -1};  // zeta^2
    }
}

const std::array<Eisenstein, 6>& units() {
    static const std::array<Eisenstein, 6> u = {
        Eisenstein{1, 0},  Eisenstein{-1, 0},   // +-1
        Eisenstein{0, 1},  Eisenstein{0, -1},   // +-zeta
        Eisenstein{-1, -1}, Eisenstein{1, 1},   // +-zeta^2
    };
    return u;
}

std::pair<Eisenstein, Eisenstein> divmod(const Eisenstein& a, const Eisenstein& b) {
    if (b.is_zero()) throw DomainError("divmod: division by zero in Z[zeta]");
    Eisenstein num = a * conj(b);
    mpz_class den = norm(b);
    Eisenstein q{round_nearest(num.re, den), round_nearest(num.zc, den)};
    Eisenstein r = a - q * b;
    // The rounded quotient is within distance < 1 of the true one, so the
    // remainder norm is at most 3/4 of N(b).
    if (norm(r) >= den) throw InternalError("divmod: remainder norm not reduced");
    return {q, r};
}

Eisenstein gcd(Eisenstein a, Eisenstein b) {
    while (!b.is_zero()) {
        Eisenstein r = divmod(a, b).second;
        a = b;
        b = r;
    }
    return a;
}

Eisenstein primary_associate(const Eisenstein& z) {
    if (z.is_zero() || mod3(norm(z)) == 0) {
        throw DomainError("primary_associate: norm divisible by 3 for " + to_string(z));
    }
    for (const Eisenstein& u : units()) {
        Eisenstein w = u * z;
        if (mod3(w.re) == 2 && mod3(w.zc) == 0) return w;
    }
    throw InternalError("primary_associate: no primary associate of " + to_string(z));
}

std::pair<Eisenstein, Eisenstein> split_prime(const mpz_class& ell, std::uint64_t seed) {
    if (ell < 7 || mod3(ell) != 1) {
        throw DomainError("split_prime: " + ell.get_str() + " is not a prime == 1 (mod 3)");
    }
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * mpz_fdiv_ui(ell.get_mpz_t(), ~0UL)));
    mpz_class exp = (ell - 1) / 3;
    mpz_class r = 0;
    for (int attempt = 0; attempt < 256; ++attempt) {
        // Random base below ell; c = a^((ell-1)/3) is a primitive cube root of
        // unity whenever a is not a cube mod ell (2/3 of all bases, if ell is
        // actually prime).
        mpz_class a = (mpz_class(rng()) << 64) | mpz_class(rng());
        a = a % (ell - 3) + 2;
        mpz_class c = powm(a, exp, ell);
        if (c == 1) continue;
        if ((c * c + c + 1) % ell != 0) {
            throw DomainError("split_prime: " + ell.get_str() +
                              " has no cube root of unity (not prime?)");
        }
        r = c;
        break;
    }
    if (r == 0) {
        throw DomainError("split_prime: could not find a cube root of unity mod " +
                          ell.get_str() + " (not prime?)");
    }
    // ell and r - zeta share exactly one prime factor; their gcd generates it.
    Eisenstein g = gcd(Eisenstein{ell, 0}, Eisenstein{r, -1});
    if (norm(g) != ell) {
        throw DomainError("split_prime: " + ell.get_str() + " does not split (not prime?)");
    }
    Eisenstein p = primary_associate(g);
    if (p.zc == 0) throw InternalError("split_prime: rational divisor of a split prime");
    if (p.zc > 0) return {p, conj(p)};
    return {conj(p), p};
}

}  // namespace cubesum
