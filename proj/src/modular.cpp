#include "cubesum/modular.hpp"

#include <algorithm>

namespace cubesum {

namespace {

mpz_class powm(const mpz_class& base, const mpz_class& exp, const mpz_class& mod) {
    mpz_class out;
    mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return out;
}

mpz_class fmod_pos(const mpz_class& x, const mpz_class& m) {
    mpz_class out;
    mpz_fdiv_r(out.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return out;
}

int mod9i(const mpz_class& x) { return static_cast<int>(mpz_fdiv_ui(x.get_mpz_t(), 9)); }

}  // namespace

mpz_class attached_cube_root(const Eisenstein& pi) {
    mpz_class ell = norm(pi);
    if (ell < 7 || mpz_fdiv_ui(ell.get_mpz_t(), 3) != 1) {
        throw DomainError("attached_cube_root: N(" + to_string(pi) + ") is not == 1 (mod 3)");
    }
    mpz_class b = fmod_pos(pi.zc, ell);
    mpz_class binv;
    if (b == 0 || mpz_invert(binv.get_mpz_t(), b.get_mpz_t(), ell.get_mpz_t()) == 0) {
        throw DomainError("attached_cube_root: " + to_string(pi) + " is not a split-prime divisor");
    }
    mpz_class r = fmod_pos(-pi.re * binv, ell);
    if ((r * r + r + 1) % ell != 0) {
        throw DomainError("attached_cube_root: N(" + to_string(pi) + ") is not prime");
    }
    return r;
}

int fp_cubic_character(const mpz_class& a, const mpz_class& ell, const mpz_class& r) {
    mpz_class am = fmod_pos(a, ell);
    if (am == 0) throw DomainError("fp_cubic_character: argument divisible by ell");
    mpz_class s = powm(am, (ell - 1) / 3, ell);
    if (s == 1) return 0;
    if (s == r) return 1;
    if (s == fmod_pos(-1 - r, ell)) return 2;  // r^2 = -1 - r
    throw InternalError("fp_cubic_character: value is not a cube root of unity (ell composite?)");
}

int cubic_symbol(const Eisenstein& alpha, const Eisenstein& pi) {
    mpz_class ell = norm(pi);
    mpz_class r = attached_cube_root(pi);
    mpz_class res = fmod_pos(alpha.re + alpha.zc * r, ell);
    if (res == 0) {
        throw DomainError("cubic_symbol: " + to_string(alpha) + " is divisible by " + to_string(pi));
    }
    return fp_cubic_character(res, ell, r);
}

bool is_cube_mod_ell(const mpz_class& a, const mpz_class& ell) {
    if (ell < 2 || ell % 3 == 0) {
        throw DomainError("is_cube_mod_ell: modulus must be a prime != 3");
    }
    mpz_class am = fmod_pos(a, ell);
    if (am == 0) throw DomainError("is_cube_mod_ell: argument divisible by ell");
    if (mpz_fdiv_ui(ell.get_mpz_t(), 3) == 2) return true;  // cubing is a bijection
    return powm(am, (ell - 1) / 3, ell) == 1;
}

Fp2 fp2_reduce(const Eisenstein& x, const mpz_class& ell) {
    return {fmod_pos(x.re, ell), fmod_pos(x.zc, ell)};
}

Fp2 fp2_mul(const Fp2& x, const Fp2& y, const mpz_class& ell) {
    // Same multiplication rule as Z[zeta]: tau^2 = -1 - tau.
    mpz_class bd = x.b * y.b;
    return {fmod_pos(x.a * y.a - bd, ell), fmod_pos(x.a * y.b + x.b * y.a - bd, ell)};
}

Fp2 fp2_pow(const Fp2& base, const mpz_class& exp, const mpz_class& ell) {
    if (exp < 0) throw DomainError("fp2_pow: negative exponent");
    Fp2 acc{1, 0};
    Fp2 sq = base;
    mp_bitcnt_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
    if (exp == 0) return acc;
    for (mp_bitcnt_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(exp.get_mpz_t(), i)) acc = fp2_mul(acc, sq, ell);
        if (i + 1 < bits) sq = fp2_mul(sq, sq, ell);
    }
    return acc;
}

int fp2_cubic_character(const Fp2& z, const mpz_class& ell) {
    if (z.is_zero()) throw DomainError("fp2_cubic_character: zero argument");
    Fp2 s = fp2_pow(z, (ell * ell - 1) / 3, ell);
    if (s == Fp2{1, 0}) return 0;
    if (s == Fp2{0, 1}) return 1;                                  // tau
    if (s == Fp2{fmod_pos(-1, ell), fmod_pos(-1, ell)}) return 2;  // tau^2
    throw InternalError("fp2_cubic_character: value is not a cube root of unity");
}

bool is_cube_fp2(const Fp2& z, const mpz_class& ell) {
    return fp2_cubic_character(z, ell) == 0;
}

Mod9 mod9_reduce(const Eisenstein& x) { return {mod9i(x.re), mod9i(x.zc)}; }

Mod9 mod9_reduce_int(const mpz_class& x) { return {mod9i(x), 0}; }

Mod9 mod9_mul(const Mod9& x, const Mod9& y) {
    int bd = x.zc * y.zc;
    int re = x.re * y.re - bd;
    int zc = x.re * y.zc + x.zc * y.re - bd;
    return {((re % 9) + 9) % 9, ((zc % 9) + 9) % 9};
}

Mod9 mod9_pow(Mod9 base, int exp) {
    if (exp < 0) throw DomainError("mod9_pow: negative exponent");
    Mod9 acc{1, 0};
    while (exp > 0) {
        if (exp & 1) acc = mod9_mul(acc, base);
        base = mod9_mul(base, base);
        exp >>= 1;
    }
    return acc;
}

bool mod9_is_unit(const Mod9& x) {
    // Unit exactly when the norm is prime to 3.
    return ((x.re * x.re - x.re * x.zc + x.zc * x.zc) % 3) != 0;
}

Mod9 mod9_inv(const Mod9& x) {
    if (!mod9_is_unit(x)) throw DomainError("mod9_inv: " + to_string(x) + " is not a unit");
    for (int re = 0; re < 9; ++re) {
        for (int zc = 0; zc < 9; ++zc) {
            Mod9 cand{re, zc};
            if (mod9_mul(x, cand) == Mod9{1, 0}) return cand;
        }
    }
    throw InternalError("mod9_inv: unit without inverse");
}

const std::vector<Mod9>& unit_cubes_mod9() {
    static const std::vector<Mod9> cubes = [] {
        std::vector<Mod9> out;
        for (int re = 0; re < 9; ++re) {
            for (int zc = 0; zc < 9; ++zc) {
                Mod9 u{re, zc};
                if (!mod9_is_unit(u)) continue;
                Mod9 c = mod9_mul(mod9_mul(u, u), u);
                if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
            }
        }
        std::sort(out.begin(), out.end(), [](const Mod9& a, const Mod9& b) {
            return a.re != b.re ? a.re < b.re : a.zc < b.zc;
        });
        return out;
    }();
    return cubes;
}

bool is_unit_cube_mod9(const Mod9& x) {
    if (!mod9_is_unit(x)) throw DomainError("is_unit_cube_mod9: " + to_string(x) + " is not a unit");
    const auto& cubes = unit_cubes_mod9();
    return std::find(cubes.begin(), cubes.end(), x) != cubes.end();
}

std::string to_string(const Mod9& x) {
    return to_string(Eisenstein{x.re, x.zc});
}

}  // namespace cubesum
