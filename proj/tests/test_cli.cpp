#include "idealforge/cli.hpp"
#include "idealforge/generators.hpp"
#include "idealforge/serialize.hpp"
#include "idealforge/suites.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <sstream>

using namespace idealforge;
using nlohmann::json;

namespace {

struct RunResult {
    int code;
    json report;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    RunResult r{code, json(), err.str()};
    if (!out.str().empty() && out.str()[0] == '{') r.report = json::parse(out.str());
    return r;
}

json strip_timing(json j) {
    j.erase("wall_ms");
    return j;
}

}  // namespace

TEST_CASE("element serialization round trip") {
    CHECK(element_to_json(CircleHomeo::identity()).dump() == R"({"breaks":[["0","0"],["1","1"]]})");
    CHECK(element_to_json(CircleHomeo::rotation(Dyadic(BigInt(1), 1))).dump() ==
          R"({"breaks":[["0","1/2^1"],["1","3/2^1"]]})");
    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; ++t) {
        CircleHomeo g = random_word(rng, generators_T(), 10);
        CHECK(element_from_json(element_to_json(g)) == g);
    }
    CHECK_THROWS_AS(element_from_json(json::parse(R"({"breaks":[["0","1/3"],["1","4/3"]]})")),
                    std::invalid_argument);
}

TEST_CASE("verify lattice --instance s3_z3 --oracle") {
    auto r = run_cli({"verify", "lattice", "--instance", "s3_z3", "--oracle"});
    CHECK(r.code == 0);
    CHECK(r.report["instance"] == "s3_z3");
    CHECK(r.report["adjunction"] == "pass");
    CHECK(r.report["thm_conditions"] == json::array({false, false, false, false}));
    CHECK(r.report["thm_conditions_equivalent"] == true);
    CHECK(!r.report["non_induced_maximal"].is_null());
    CHECK(r.report["oracle"]["trace"]["agree"] == true);
    CHECK(r.report["oracle"]["randomized_weighting"]["agree"] == true);
    CHECK(r.report["invariance"]["equal"] == true);
    CHECK(r.report["invariance"]["coinduced"].size() == 4);
    for (const auto& item : r.report["prop_items"]) CHECK(item["ok"] == true);
}

TEST_CASE("verify lattice over the whole catalog") {
    auto r = run_cli({"verify", "lattice"});
    CHECK(r.code == 0);
    CHECK(r.report["reports"].size() == 6);
    CHECK(r.report["pass"] == true);
}

TEST_CASE("verify lattice --file and bad input") {
    auto miss = run_cli({"verify", "lattice", "--file", "/nonexistent.json"});
    CHECK(miss.code == 2);
    auto both = run_cli({"verify", "lattice", "--instance", "s3_z3", "--file", "x.json"});
    CHECK(both.code == 2);
    auto unknown = run_cli({"verify", "lattice", "--instance", "nope"});
    CHECK(unknown.code == 2);
}

TEST_CASE("verify thompson suites") {
    auto rel = run_cli({"verify", "thompson", "--suite", "relations"});
    CHECK(rel.code == 0);
    CHECK(rel.report["details"]["relation1"] == true);
    CHECK(rel.report["details"]["relation2"] == true);

    auto coc = run_cli({"verify", "thompson", "--suite", "cocycle", "--seed", "7", "--cases", "40"});
    CHECK(coc.code == 0);
    CHECK(coc.report["seed"] == 7);
    CHECK(coc.report["cases"] == 40);

    auto wit = run_cli({"verify", "thompson", "--suite", "witness", "--m", "2", "--n", "4"});
    CHECK(wit.code == 0);
    CHECK(wit.report["details"]["disjoint_mod_m"] == true);
    CHECK(wit.report["details"]["disjoint_mod_n"] == false);

    auto bad = run_cli({"verify", "thompson", "--suite", "bogus"});
    CHECK(bad.code == 2);
}

TEST_CASE("seeded reports are deterministic") {
    auto a = run_cli({"verify", "thompson", "--suite", "cocycle", "--seed", "11", "--cases", "25"});
    auto b = run_cli({"verify", "thompson", "--suite", "cocycle", "--seed", "11", "--cases", "25"});
    CHECK(strip_timing(a.report) == strip_timing(b.report));
    auto c = run_cli({"verify", "thompson", "--suite", "stabilizer", "--seed", "12", "--cases", "25"});
    auto d = run_cli({"verify", "thompson", "--suite", "stabilizer", "--seed", "12", "--cases", "25"});
    CHECK(strip_timing(c.report) == strip_timing(d.report));
}

TEST_CASE("IDEALFORGE_SEED overrides --seed") {
    setenv("IDEALFORGE_SEED", "99", 1);
    auto a = run_cli({"verify", "thompson", "--suite", "cocycle", "--seed", "1", "--cases", "10"});
    unsetenv("IDEALFORGE_SEED");
    auto b = run_cli({"verify", "thompson", "--suite", "cocycle", "--seed", "99", "--cases", "10"});
    CHECK(a.report["seed"] == 99);
    CHECK(strip_timing(a.report) == strip_timing(b.report));
}

TEST_CASE("witness subcommands") {
    auto comp = run_cli({"witness", "compress", "--x", "1/3", "--u1-lo", "1/2", "--u1-hi", "3/4", "--u2-lo",
                         "7/2^4", "--u2-hi", "1/2"});
    CHECK(comp.code == 0);
    CHECK(comp.report["fixes_neighborhood_of_x"] == true);
    CircleHomeo g = element_from_json(comp.report["element"]);
    CHECK(g.fixes_neighborhood_of(Rat(1, 3)));

    auto sep = run_cli({"witness", "separate", "--x", "1/3", "--u1-lo", "5/2^3", "--u1-hi", "3/2^2", "--u2-lo",
                        "3/2^3", "--u2-hi", "1/2", "--u3-lo", "5/2^3", "--u3-hi", "11/2^4"});
    CHECK(sep.code == 0);

    auto slope = run_cli({"witness", "slopewindow", "--window-lo", "1/2", "--window-hi", "3/4", "--side", "right",
                          "--m", "3"});
    CHECK(slope.code == 0);
    CHECK(slope.report["edge_slopes"] == json::array({0, 3}));

    auto enc = run_cli({"witness", "enclose", "--x", "1/3", "--element", comp.report["element"].dump()});
    CHECK(enc.code == 0);
    CHECK(enc.report["arc"].size() == 2);

    auto bad = run_cli({"witness", "compress", "--x", "1/3", "--u1-lo", "1/3", "--u1-hi", "3/4", "--u2-lo", "1/2",
                        "--u2-hi", "3/4"});
    CHECK(bad.code == 2);  // non-dyadic arc endpoint
}

TEST_CASE("orbit command") {
    auto r = run_cli({"orbit", "--n", "2", "--denom-bound", "2^3"});
    CHECK(r.code == 0);
    CHECK(r.report["size"] == 8 * 4);
    CHECK(r.report["saturated"] == true);
    CHECK(r.report["orbit"].size() == 32);
    // sorted output, first entry is the origin
    CHECK(r.report["orbit"][0] == json::array({"0", 0, 0}));

    auto bad = run_cli({"orbit", "--n", "2", "--denom-bound", "3"});
    CHECK(bad.code == 2);
}

TEST_CASE("list instances") {
    auto r = run_cli({"list", "instances"});
    CHECK(r.code == 0);
    CHECK(r.report["instances"].size() == 6);
    CHECK(r.report["instances"][0]["name"] == "m2_scalars");
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"bogus"}).code == 2);
    CHECK(run_cli({"verify"}).code == 2);
    CHECK(run_cli({"verify", "thompson"}).code == 2);  // --suite required
}
