#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "cubesum/profile.hpp"
#include "cubesum/rank.hpp"
#include "cubesum/search.hpp"

namespace cubesum {

// Aggregated result of one CLI invocation; every section is optional so a
// subcommand fills only what it computed.  Serialization emits all top-level
// keys with null for absent sections, so consumers see a fixed shape.
struct Report {
    mpz_class n;
    std::optional<TwoPrimeProfile> profile;
    std::optional<int> dim_closed;
    std::optional<int> dim_direct;
    std::vector<std::string> basis;  // from direct enumeration only
    std::optional<RankVerdict> verdict;
    bool search_ran = false;
    std::optional<mpz_class> search_bound;
    std::optional<CubeSumWitness> witness;
    double timing_ms = 0.0;  // in-memory only, never serialized
};

std::string to_json(const Report& rep, int indent = 2);
std::string to_text(const Report& rep);

}  // namespace cubesum
