#include "cubesum/selmer.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <sstream>

namespace cubesum {

namespace {

int mod3(long v) { return static_cast<int>(((v % 3) + 3) % 3); }

mpz_class mod_ui(const mpz_class& x, unsigned long m) {
    return mpz_class(mpz_fdiv_ui(x.get_mpz_t(), m));
}

// Cubic character exponent of gen in the residue field of the place; the
// generator must be a unit there (the generator set is orthogonal: only the
// place's own uniformizer has positive valuation).
int character_at_place(const SelmerGenerator& gen, const SelmerPlace& pl) {
    if (pl.split) {
        mpz_class r = attached_cube_root(pl.pi);
        mpz_class img = (gen.value.re + gen.value.zc * r) % pl.ell;
        if (img < 0) img += pl.ell;
        if (img == 0)
            throw InternalError("generator " + gen.label +
                                " is not a unit at a place where it must be");
        return fp_cubic_character(img, pl.ell, r);
    }
    Fp2 img = fp2_reduce(gen.value, pl.ell);
    if (img.is_zero())
        throw InternalError("generator " + gen.label +
                            " is not a unit at a place where it must be");
    return fp2_cubic_character(img, pl.ell);
}

void fill_place_characters(SelmerProblem& prob) {
    for (auto& pl : prob.places) {
        pl.chi.assign(prob.gens.size(), 0);
        for (std::size_t i = 0; i < prob.gens.size(); ++i) {
            if (static_cast<int>(i) == pl.gen_index) continue;  // uniformizer slot
            pl.chi[i] = character_at_place(prob.gens[i], pl);
        }
    }
}

// The non-zeta generators multiply to n only up to a unit (their stored
// values may be any associates).  -1 is a cube, so the unit costs at most a
// power of zeta, which the zeta slot of n_vec absorbs.
void finalize_n_vec(SelmerProblem& prob, const mpz_class& n) {
    Eisenstein prod{1, 0};
    for (std::size_t i = 1; i < prob.gens.size(); ++i)
        for (int e = 0; e < prob.n_vec[i]; ++e) prod = prod * prob.gens[i].value;
    auto [q, r] = divmod(Eisenstein{n, 0}, prod);
    if (!r.is_zero() || !q.is_unit())
        throw InternalError("generators do not multiply to n up to a unit");
    for (int k = 0; k < 3; ++k) {
        Eisenstein zk = zeta_pow(k);
        if (q == zk || q == -zk) {
            prob.n_vec[0] = k;
            return;
        }
    }
    throw InternalError("unit is not +-zeta^k");
}

void fill_mod9_data(SelmerProblem& prob, const mpz_class& n) {
    prob.gens_mod9.clear();
    for (const auto& g : prob.gens) prob.gens_mod9.push_back(mod9_reduce(g.value));

    prob.n_mod_9 = static_cast<int>(mpz_fdiv_ui(n.get_mpz_t(), 9));
    prob.n_pm1_mod9 = (prob.n_mod_9 == 1 || prob.n_mod_9 == 8);

    // Local image at the prime above 3 is spanned by two unit classes: the
    // principal unit 1 + (1-zeta)^3 always, plus n itself -- replaced by zeta
    // when n == +-1 (mod 9) (there n is already in the principal part).
    Mod9 first = prob.n_pm1_mod9 ? mod9_reduce(Eisenstein{0, 1})
                                 : mod9_reduce_int(n);
    prob.first_gen_inv = mod9_inv(first);

    Eisenstein p{1, -1};  // 1 - zeta
    Eisenstein p3 = p * p * p;
    Mod9 aux = mod9_reduce(Eisenstein{1, 0} + p3);
    prob.aux_unit_inv = mod9_inv(aux);
}

std::string power_label(const std::string& base, int e) {
    if (e == 1) return base;
    return base + "^" + std::to_string(e);
}

std::string vector_label(const SelmerProblem& prob, const std::vector<int>& v) {
    std::vector<int> nv(prob.n_vec.size());
    for (std::size_t i = 0; i < nv.size(); ++i) nv[i] = mod3(prob.n_vec[i]);
    std::vector<int> nv2(nv.size());
    for (std::size_t i = 0; i < nv.size(); ++i) nv2[i] = mod3(2 * nv[i]);
    if (v == nv) return "(n^2, n)";
    if (v == nv2) return "(n, n^2)";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (!first) out << "*";
        out << power_label(prob.gens[i].label, v[i]);
        first = false;
    }
    if (first) return "1";
    return out.str();
}

// Echelonize a set of F_3 vectors (rows); returns an RREF basis.
std::vector<std::vector<int>> rref_basis(std::vector<std::vector<int>> rows) {
    std::vector<std::vector<int>> basis;
    for (auto& v : rows) {
        for (const auto& b : basis) {
            std::size_t p = 0;
            while (p < b.size() && b[p] == 0) ++p;
            if (p < b.size() && v[p] != 0) {
                int c = v[p];  // b has pivot 1, subtract c*b
                for (std::size_t i = 0; i < v.size(); ++i)
                    v[i] = mod3(v[i] - c * b[i]);
            }
        }
        std::size_t p = 0;
        while (p < v.size() && v[p] == 0) ++p;
        if (p == v.size()) continue;
        if (v[p] == 2)  // normalize pivot to 1
            for (auto& x : v) x = mod3(2 * x);
        basis.push_back(v);
    }
    std::sort(basis.begin(), basis.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  std::size_t pa = 0, pb = 0;
                  while (pa < a.size() && a[pa] == 0) ++pa;
                  while (pb < b.size() && b[pb] == 0) ++pb;
                  return pa < pb;
              });
    // clear entries above each pivot
    for (std::size_t j = 0; j < basis.size(); ++j) {
        std::size_t p = 0;
        while (p < basis[j].size() && basis[j][p] == 0) ++p;
        for (std::size_t i = 0; i < j; ++i) {
            int c = basis[i][p];
            if (c == 0) continue;
            for (std::size_t t = 0; t < basis[i].size(); ++t)
                basis[i][t] = mod3(basis[i][t] - c * basis[j][t]);
        }
    }
    return basis;
}

long encode(const std::vector<int>& v) {
    long code = 0;
    for (std::size_t i = v.size(); i-- > 0;) code = code * 3 + v[i];
    return code;
}

}  // namespace

SelmerProblem build_selmer_problem(const TwoPrimeProfile& prof) {
    SelmerProblem prob;
    prob.gens.push_back({"zeta", Eisenstein{0, 1}});

    auto add_inert_place = [&](const std::string& label, const PrimeFactor& p) {
        int idx = static_cast<int>(prob.gens.size());
        prob.gens.push_back({label, Eisenstein{p.ell, 0}});
        prob.n_vec.push_back(p.exp);
        SelmerPlace pl;
        pl.split = false;
        pl.ell = p.ell;
        pl.pi = Eisenstein{p.ell, 0};
        pl.gen_index = idx;
        pl.n_val = p.exp;
        prob.places.push_back(pl);
    };
    auto add_split_pair = [&](const std::string& stem, const PrimeFactor& p,
                              const PrimeSplitting& s) {
        for (int half = 0; half < 2; ++half) {
            int idx = static_cast<int>(prob.gens.size());
            const Eisenstein& u = (half == 0) ? s.pi : s.pi_bar;
            prob.gens.push_back({half == 0 ? stem : stem + "_bar", u});
            prob.n_vec.push_back(p.exp);
            SelmerPlace pl;
            pl.split = true;
            pl.ell = p.ell;
            pl.pi = u;
            pl.gen_index = idx;
            pl.n_val = p.exp;
            prob.places.push_back(pl);
        }
    };

    prob.n_vec.push_back(0);  // zeta carries no part of n
    if (prof.k1 == 0) {
        add_inert_place("l1", prof.p1);
        add_inert_place("l2", prof.p2);
    } else if (prof.k1 == 1) {
        if (!prof.s1) throw InternalError("split prime data missing for p1");
        add_split_pair("pi1", prof.p1, *prof.s1);
        add_inert_place("l2", prof.p2);
    } else {
        if (!prof.s1 || !prof.s2) throw InternalError("split prime data missing");
        add_split_pair("pi1", prof.p1, *prof.s1);
        add_split_pair("pi2", prof.p2, *prof.s2);
    }

    finalize_n_vec(prob, prof.n);
    fill_place_characters(prob);
    fill_mod9_data(prob, prof.n);
    return prob;
}

SelmerProblem build_all_inert_problem(
    const std::vector<std::pair<mpz_class, int>>& primes) {
    if (primes.empty()) throw DomainError("need at least one prime");
    mpz_class n = 1;
    std::set<mpz_class> seen;
    SelmerProblem prob;
    prob.gens.push_back({"zeta", Eisenstein{0, 1}});
    prob.n_vec.push_back(0);
    int label = 1;
    for (const auto& [ell, e] : primes) {
        if (mod_ui(ell, 3) != 2)
            throw DomainError("prime " + ell.get_str() + " is not 2 mod 3");
        if (e < 1 || e > 2) throw DomainError("exponents must be 1 or 2");
        if (!seen.insert(ell).second)
            throw DomainError("repeated prime " + ell.get_str());
        int idx = static_cast<int>(prob.gens.size());
        prob.gens.push_back({"l" + std::to_string(label++), Eisenstein{ell, 0}});
        prob.n_vec.push_back(e);
        SelmerPlace pl;
        pl.split = false;
        pl.ell = ell;
        pl.pi = Eisenstein{ell, 0};
        pl.gen_index = idx;
        pl.n_val = e;
        prob.places.push_back(pl);
        mpz_class pe = ell;
        if (e == 2) pe *= ell;
        n *= pe;
    }
    finalize_n_vec(prob, n);
    fill_place_characters(prob);
    fill_mod9_data(prob, n);
    return prob;
}

bool local_condition_at_q(const SelmerProblem& prob, const std::vector<int>& x,
                          std::size_t place_idx) {
    const SelmerPlace& pl = prob.places.at(place_idx);
    for (int j = 0; j < 3; ++j) {
        if (mod3(x[pl.gen_index] - j * pl.n_val) != 0) continue;
        long s = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            s += static_cast<long>(x[i] - j * prob.n_vec[i]) * pl.chi[i];
        if (mod3(s) == 0) return true;
    }
    return false;
}

bool local_condition_at_p(const SelmerProblem& prob, const std::vector<int>& x) {
    Mod9 xm{1, 0};
    for (std::size_t i = 0; i < x.size(); ++i)
        xm = mod9_mul(xm, mod9_pow(prob.gens_mod9[i], x[i]));
    Mod9 tj = xm;
    for (int j = 0; j < 3; ++j) {
        Mod9 t = tj;
        for (int k = 0; k < 3; ++k) {
            if (is_unit_cube_mod9(t)) return true;
            t = mod9_mul(t, prob.aux_unit_inv);
        }
        tj = mod9_mul(tj, prob.first_gen_inv);
    }
    return false;
}

SelmerReport dim_selmer_direct(const SelmerProblem& prob) {
    const std::size_t m = prob.gens.size();
    long total = 1;
    for (std::size_t i = 0; i < m; ++i) total *= 3;

    SelmerReport rep;
    rep.method = SelmerMethod::DirectEnumeration;

    std::vector<std::vector<int>> accepted;
    std::set<long> accepted_codes;
    for (long idx = 0; idx < total; ++idx) {
        CandidateTrace tr;
        tr.exps.resize(m);
        long t = idx;
        for (std::size_t i = 0; i < m; ++i) {
            tr.exps[i] = static_cast<int>(t % 3);
            t /= 3;
        }
        bool ok = true;
        tr.place_pass.resize(prob.places.size());
        for (std::size_t q = 0; q < prob.places.size(); ++q) {
            tr.place_pass[q] = local_condition_at_q(prob, tr.exps, q);
            ok = ok && tr.place_pass[q];
        }
        tr.p_pass = local_condition_at_p(prob, tr.exps);
        ok = ok && tr.p_pass;
        tr.accepted = ok;
        if (ok) {
            accepted.push_back(tr.exps);
            accepted_codes.insert(encode(tr.exps));
        }
        rep.trace.push_back(std::move(tr));
    }

    // The accepted set must be an F_3 subspace containing 0 and the class of n.
    std::vector<int> zero(m, 0), nv(m);
    for (std::size_t i = 0; i < m; ++i) nv[i] = mod3(prob.n_vec[i]);
    if (!accepted_codes.count(encode(zero)))
        throw InternalError("accepted set does not contain the identity");
    if (!accepted_codes.count(encode(nv)))
        throw InternalError("accepted set does not contain the class of n");
    for (const auto& a : accepted)
        for (const auto& b : accepted) {
            std::vector<int> s(m);
            for (std::size_t i = 0; i < m; ++i) s[i] = mod3(a[i] + b[i]);
            if (!accepted_codes.count(encode(s)))
                throw InternalError("accepted set is not closed under addition");
        }
    long cnt = static_cast<long>(accepted.size());
    int dim = 0;
    long pw = 1;
    while (pw < cnt) {
        pw *= 3;
        ++dim;
    }
    if (pw != cnt)
        throw InternalError("accepted set size " + std::to_string(cnt) +
                            " is not a power of 3");

    rep.dim = dim;
    rep.accepted_count = cnt;
    auto basis = rref_basis(accepted);
    if (static_cast<int>(basis.size()) != dim)
        throw InternalError("basis extraction disagrees with accepted count");
    for (const auto& v : basis) rep.basis.push_back(vector_label(prob, v));
    return rep;
}

SelmerReport dim_selmer_direct(const TwoPrimeProfile& prof) {
    return dim_selmer_direct(build_selmer_problem(prof));
}

namespace {

void expect_n_mod_9(const TwoPrimeProfile& prof, std::initializer_list<int> allowed,
                    const char* where) {
    for (int v : allowed)
        if (prof.n_mod_9 == v) return;
    throw InternalError(std::string("unexpected n mod 9 in closed form (") + where +
                        "): " + std::to_string(prof.n_mod_9));
}

int closed_dim_two_inert(const TwoPrimeProfile& prof) {
    int m1 = prof.p1.mod9, m2 = prof.p2.mod9;
    bool same_exp = (prof.p1.exp == prof.p2.exp);
    if (same_exp) {
        // n = (l1*l2)^e
        if ((m1 == 2 && m2 == 5) || (m1 == 5 && m2 == 2)) {
            expect_n_mod_9(prof, {1}, "inert e1==e2, {2,5}");
            return 1;
        }
        if (m1 == 8 && m2 == 8) {
            expect_n_mod_9(prof, {1}, "inert e1==e2, {8,8}");
            return 3;
        }
        expect_n_mod_9(prof, {4, 7}, "inert e1==e2, mixed");
        return 2;
    }
    // n = l1^2 * l2 after relabeling
    if (prof.p1.exp != 2 || prof.p2.exp != 1)
        throw InternalError("two-inert profile not normalized to l1^2*l2");
    if (m1 == m2 && (m1 == 2 || m1 == 5)) {
        expect_n_mod_9(prof, {8}, "inert l1^2*l2, equal {2,5}");
        return 1;
    }
    if (m1 == 8 && m2 == 8) {
        expect_n_mod_9(prof, {8}, "inert l1^2*l2, {8,8}");
        return 3;
    }
    expect_n_mod_9(prof, {2, 5}, "inert l1^2*l2, mixed");
    return 2;
}

int closed_dim_one_split(const TwoPrimeProfile& prof) {
    if (!prof.sym_l2_at_pi1)
        throw InternalError("missing cached character for split/inert profile");
    bool sym_trivial = (*prof.sym_l2_at_pi1 == 0);
    bool pm1 = (prof.n_mod_9 == 1 || prof.n_mod_9 == 8);
    if (pm1) {
        if (prof.p1.mod9 == 1 && prof.p2.mod9 == 8 && sym_trivial) return 4;
        return 2;
    }
    return sym_trivial ? 3 : 1;
}

int closed_dim_two_split(const TwoPrimeProfile& prof) {
    if (!prof.sym_pi1_at_pi2 || !prof.sym_pi1_bar_at_pi2)
        throw InternalError("missing cached characters for split/split profile");
    expect_n_mod_9(prof, {1, 4, 7}, "split/split");
    bool both_trivial = (*prof.sym_pi1_at_pi2 == 0 && *prof.sym_pi1_bar_at_pi2 == 0);
    if (prof.n_mod_9 == 1) {
        if (prof.p1.mod9 == 1 && prof.p2.mod9 == 1 && both_trivial) return 5;
        return 3;
    }
    return both_trivial ? 4 : 2;
}

}  // namespace

SelmerReport dim_selmer_closed(const TwoPrimeProfile& prof) {
    SelmerReport rep;
    rep.method = SelmerMethod::ClosedForm;
    switch (prof.k1) {
        case 0: rep.dim = closed_dim_two_inert(prof); break;
        case 1: rep.dim = closed_dim_one_split(prof); break;
        case 2: rep.dim = closed_dim_two_split(prof); break;
        default: throw InternalError("impossible split count");
    }
    return rep;
}

int dim_selmer_all_inert(const std::vector<std::pair<mpz_class, int>>& primes) {
    if (primes.empty()) throw DomainError("need at least one prime");
    int k = static_cast<int>(primes.size());
    mpz_class n = 1;
    bool all8 = true;
    for (const auto& [ell, e] : primes) {
        if (mod_ui(ell, 3) != 2)
            throw DomainError("prime " + ell.get_str() + " is not 2 mod 3");
        if (e < 1 || e > 2) throw DomainError("exponents must be 1 or 2");
        mpz_class pe = ell;
        if (e == 2) pe *= ell;
        n *= pe;
        if (mod_ui(ell, 9) != 8) all8 = false;
    }
    unsigned long nm9 = mpz_fdiv_ui(n.get_mpz_t(), 9);
    if (nm9 != 1 && nm9 != 8) return k;
    return all8 ? k + 1 : k - 1;
}

SelmerReport dim_selmer_checked(const TwoPrimeProfile& prof) {
    SelmerReport closed = dim_selmer_closed(prof);
    SelmerReport direct = dim_selmer_direct(prof);
    if (closed.dim != direct.dim)
        throw InternalError(
            "selmer dimension mismatch for n = " + prof.n.get_str() +
            ": closed form " + std::to_string(closed.dim) + ", enumeration " +
            std::to_string(direct.dim));
    return direct;
}

}  // namespace cubesum
