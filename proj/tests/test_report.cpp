#include <doctest.h>

#include <json.hpp>
#include <string>

#include "cubesum/profile.hpp"
#include "cubesum/rank.hpp"
#include "cubesum/report.hpp"
#include "cubesum/selmer.hpp"

using namespace cubesum;
using ordered_json = nlohmann::ordered_json;

namespace {

Report full_report_262() {
    Report rep;
    rep.n = 262;
    rep.profile = classify(262);
    auto direct = dim_selmer_direct(*rep.profile);
    rep.dim_closed = dim_selmer_closed(*rep.profile).dim;
    rep.dim_direct = direct.dim;
    rep.basis = direct.basis;
    rep.verdict = rank_verdict(direct.dim, *rep.profile);
    return rep;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("full report serializes with fixed shape and key order") {
    Report rep = full_report_262();

    ordered_json expected = ordered_json::parse(R"json({
        "schema_version": "1",
        "n": "262",
        "profile": {
            "primes": [
                {"l": "2", "e": 1, "mod9": 2, "split": false},
                {"l": "131", "e": 1, "mod9": 5, "split": false}
            ],
            "k1": 0,
            "k2": 2,
            "n_mod_9": 1
        },
        "selmer": {
            "closed": 1,
            "direct": 1,
            "basis": ["(n^2, n)"]
        },
        "verdict": {
            "t": 1,
            "rank_upper": 0,
            "parity": 0,
            "possible_ranks": [0],
            "unconditional": "rank_zero",
            "cube_sum": "proven_not",
            "root_number": 1
        },
        "search": null
    })json");

    CHECK(to_json(rep) == expected.dump(2));
}

TEST_CASE("search-only report nulls the uncomputed sections") {
    Report rep;
    rep.n = 20;
    rep.search_ran = true;
    rep.search_bound = 10;
    rep.witness = CubeSumWitness{19, 1, 7};

    ordered_json expected = ordered_json::parse(R"({
        "schema_version": "1",
        "n": "20",
        "profile": null,
        "selmer": null,
        "verdict": null,
        "search": {
            "bound": "10",
            "witness": {"a": "19", "b": "1", "c": "7"}
        }
    })");

    CHECK(to_json(rep) == expected.dump(2));
}

TEST_CASE("searches without a hit record an explicit null witness") {
    Report rep;
    rep.n = 14;
    rep.search_ran = true;
    rep.search_bound = 1000;

    ordered_json j = ordered_json::parse(to_json(rep));
    CHECK(j["search"]["bound"] == "1000");
    CHECK(j["search"]["witness"].is_null());
    CHECK(j["profile"].is_null());
}

TEST_CASE("classification-only report keeps selmer and verdict null") {
    Report rep;
    rep.n = 14;
    rep.profile = classify(14);

    ordered_json j = ordered_json::parse(to_json(rep));
    CHECK(j["profile"]["k1"] == 1);
    CHECK(j["profile"]["k2"] == 1);
    CHECK(j["profile"]["primes"][0]["l"] == "7");  // split prime listed first
    CHECK(j["profile"]["primes"][0]["split"] == true);
    CHECK(j["profile"]["primes"][1]["l"] == "2");
    CHECK(j["selmer"].is_null());
    CHECK(j["verdict"].is_null());
    CHECK(j["search"].is_null());
}

TEST_CASE("text rendering mentions the decisive facts") {
    Report rep = full_report_262();
    std::string text = to_text(rep);
    CHECK(text.find("n = 262") != std::string::npos);
    CHECK(text.find("stays inert") != std::string::npos);
    CHECK(text.find("rank 0 unconditionally") != std::string::npos);
    CHECK(text.find("(n^2, n)") != std::string::npos);

    Report srep;
    srep.n = 20;
    srep.search_ran = true;
    srep.search_bound = 10;
    srep.witness = CubeSumWitness{19, 1, 7};
    std::string stext = to_text(srep);
    CHECK(stext.find("a = 19") != std::string::npos);
    CHECK(stext.find("c = 7") != std::string::npos);
}

}  // TEST_SUITE
