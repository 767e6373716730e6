#include "cubesum/report.hpp"

#include <json.hpp>
#include <sstream>

namespace cubesum {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json profile_json(const TwoPrimeProfile& p) {
    ordered_json primes = ordered_json::array();
    for (const PrimeFactor* f : {&p.p1, &p.p2}) {
        ordered_json e;
        e["l"] = f->ell.get_str();
        e["e"] = f->exp;
        e["mod9"] = f->mod9;
        e["split"] = f->split;
        primes.push_back(e);
    }
    ordered_json out;
    out["primes"] = primes;
    out["k1"] = p.k1;
    out["k2"] = p.k2;
    out["n_mod_9"] = p.n_mod_9;
    return out;
}

ordered_json verdict_json(const RankVerdict& v) {
    ordered_json out;
    out["t"] = v.t;
    out["rank_upper"] = v.rank_upper;
    out["parity"] = v.parity;
    out["possible_ranks"] = v.possible_ranks;
    out["unconditional"] = v.rank_zero_unconditional ? "rank_zero" : "none";
    out["cube_sum"] = to_string(v.cube_sum);
    out["root_number"] = v.root_number;
    return out;
}

}  // namespace

std::string to_json(const Report& rep, int indent) {
    ordered_json j;
    j["schema_version"] = "1";
    j["n"] = rep.n.get_str();

    j["profile"] = rep.profile ? profile_json(*rep.profile) : ordered_json(nullptr);

    ordered_json selmer;
    selmer["closed"] = rep.dim_closed ? ordered_json(*rep.dim_closed) : ordered_json(nullptr);
    selmer["direct"] = rep.dim_direct ? ordered_json(*rep.dim_direct) : ordered_json(nullptr);
    selmer["basis"] = rep.basis;
    j["selmer"] = (rep.dim_closed || rep.dim_direct) ? selmer : ordered_json(nullptr);

    j["verdict"] = rep.verdict ? verdict_json(*rep.verdict) : ordered_json(nullptr);

    if (rep.search_ran) {
        ordered_json s;
        s["bound"] = rep.search_bound ? rep.search_bound->get_str() : "0";
        if (rep.witness) {
            ordered_json w;
            w["a"] = rep.witness->a.get_str();
            w["b"] = rep.witness->b.get_str();
            w["c"] = rep.witness->c.get_str();
            s["witness"] = w;
        } else {
            s["witness"] = nullptr;
        }
        j["search"] = s;
    } else {
        j["search"] = nullptr;
    }
    return j.dump(indent);
}

std::string to_text(const Report& rep) {
    std::ostringstream out;
    out << "n = " << rep.n.get_str() << "\n";
    if (rep.profile) {
        const auto& p = *rep.profile;
        out << "factorization: " << p.p1.ell.get_str() << "^" << p.p1.exp << " * "
            << p.p2.ell.get_str() << "^" << p.p2.exp << "   (n mod 9 = " << p.n_mod_9
            << ")\n";
        out << "splitting in Z[zeta]: " << p.p1.ell.get_str()
            << (p.p1.split ? " splits" : " stays inert") << " ("
            << p.p1.ell.get_str() << " mod 9 = " << p.p1.mod9 << "), "
            << p.p2.ell.get_str() << (p.p2.split ? " splits" : " stays inert")
            << " (" << p.p2.ell.get_str() << " mod 9 = " << p.p2.mod9 << ")\n";
        if (p.s1)
            out << "  pi1 = " << to_string(p.s1->pi)
                << ", conj = " << to_string(p.s1->pi_bar) << "\n";
        if (p.s2)
            out << "  pi2 = " << to_string(p.s2->pi)
                << ", conj = " << to_string(p.s2->pi_bar) << "\n";
        if (p.sym_l2_at_pi1)
            out << "  character exponent of l2 at pi1: " << *p.sym_l2_at_pi1 << "\n";
        if (p.sym_pi1_at_pi2)
            out << "  character exponent of pi1 at pi2: " << *p.sym_pi1_at_pi2
                << ", of conj(pi1): " << *p.sym_pi1_bar_at_pi2 << "\n";
    }
    if (rep.dim_closed)
        out << "selmer dimension (closed form): " << *rep.dim_closed << "\n";
    if (rep.dim_direct) {
        out << "selmer dimension (enumeration): " << *rep.dim_direct << "\n";
        out << "basis:";
        if (rep.basis.empty()) out << " (trivial)";
        for (const auto& b : rep.basis) out << " [" << b << "]";
        out << "\n";
    }
    if (rep.verdict) {
        const auto& v = *rep.verdict;
        out << "rank bound: rank <= " << v.rank_upper << ", parity " << v.parity
            << ", possible ranks {";
        for (std::size_t i = 0; i < v.possible_ranks.size(); ++i)
            out << (i ? "," : "") << v.possible_ranks[i];
        out << "}\n";
        out << "root number: " << (v.root_number > 0 ? "+1" : "-1") << "\n";
        if (v.rank_zero_unconditional)
            out << "rank 0 unconditionally: n is NOT a sum of two rational cubes\n";
        else if (v.cube_sum == CubeSumStatus::CubeSumIfShaEven)
            out << "n IS a sum of two rational cubes if Sha(E/K)[3] has square "
                   "order\n";
        else
            out << "rank is even-positive-possible; no cube-sum conclusion "
                   "without further input\n";
    }
    if (rep.search_ran) {
        out << "search up to c = "
            << (rep.search_bound ? rep.search_bound->get_str() : "0") << ": ";
        if (rep.witness)
            out << "a = " << rep.witness->a.get_str()
                << ", b = " << rep.witness->b.get_str()
                << ", c = " << rep.witness->c.get_str() << "\n";
        else
            out << "no solution of a^3 + b^3 = n c^3 found\n";
    }
    return out.str();
}

}  // namespace cubesum
