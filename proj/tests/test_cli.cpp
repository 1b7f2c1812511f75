#include "doctest.h"

#include "reiscfg/cli.hpp"

#include "json.hpp"

#include <sstream>
#include <string>
#include <vector>

using namespace reiscfg;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("count: headline both-mode agreement") {
    RunResult r = run({"count", "--n", "24", "--gap", "1", "--rotsym", "--method", "both"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "30 = 30\n");
    CHECK(r.err.empty());
}

TEST_CASE("count: single-method output is just the number") {
    CHECK(run({"count", "--n", "24", "--gap", "1", "--rotsym"}).out == "30\n");
    CHECK(run({"count", "--n", "24", "--gap", "1", "--rotsym", "--method", "oracle"}).out ==
          "30\n");
    CHECK(run({"count", "--n", "6"}).out == "12\n");
    CHECK(run({"count", "--n", "1"}).out == "1\n");
    CHECK(run({"count", "--n", "1", "--rotsym"}).out == "0\n");
}

TEST_CASE("count: ternary defaults to the oracle") {
    RunResult r = run({"count", "--n", "12", "--alphabet", "3", "--gap", "1", "--rotsym"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "15\n");
}

TEST_CASE("count: ternary closed form needs the acknowledgement flag") {
    RunResult refused =
        run({"count", "--n", "12", "--alphabet", "3", "--gap", "1", "--rotsym",
             "--method", "formula"});
    CHECK(refused.code == kExitUsage);
    CHECK(refused.err.find("--allow-approx") != std::string::npos);

    RunResult formula =
        run({"count", "--n", "12", "--alphabet", "3", "--gap", "1", "--rotsym",
             "--method", "formula", "--allow-approx"});
    CHECK(formula.code == kExitOk);
    CHECK(formula.out == "13\n");

    RunResult divergent =
        run({"count", "--n", "12", "--alphabet", "3", "--gap", "1", "--rotsym",
             "--method", "both", "--allow-approx"});
    CHECK(divergent.code == kExitMismatch);
    CHECK(divergent.out == "13 != 15\n");

    // no closed form covers a per-k ternary query even with the flag
    RunResult no_form =
        run({"count", "--n", "12", "--alphabet", "3", "--gap", "1", "--rotsym", "--k",
             "4", "--method", "formula", "--allow-approx"});
    CHECK(no_form.code == kExitUsage);
}

TEST_CASE("count: JSON output round-trips byte-identically") {
    RunResult r = run({"count", "--n", "6", "--k", "3", "--method", "both", "--format",
                       "json"});
    CHECK(r.code == kExitOk);
    REQUIRE(!r.out.empty());
    REQUIRE(r.out.back() == '\n');
    std::string line = r.out.substr(0, r.out.size() - 1);

    auto j = nlohmann::ordered_json::parse(line);
    CHECK(j.dump() == line);
    CHECK(j["query"]["n"] == 6);
    CHECK(j["query"]["alphabet"] == 2);
    CHECK(j["query"]["gap"] == 0);
    CHECK(j["query"]["k"] == 3);
    CHECK(j["query"]["rotsym"] == false);
    CHECK(j["query"]["diameter"] == false);
    CHECK(j["method"] == "both");
    CHECK(j["values"]["formula"] == "3");
    CHECK(j["values"]["oracle"] == "3");
    CHECK(j["matches"] == true);
    CHECK(j["elapsed_ms"].is_number());
}

TEST_CASE("count: JSON single-value form, counts as decimal strings") {
    RunResult r = run({"count", "--n", "6", "--format", "json"});
    auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["method"] == "formula");
    CHECK(j["value"] == "12");
    CHECK(j["value"].is_string());
    CHECK(j["query"]["k"].is_null());
    CHECK(j.dump() + "\n" == r.out);
}

TEST_CASE("count: text output is deterministic across runs") {
    auto args = std::vector<std::string>{"count", "--n", "18", "--gap", "2", "--rotsym",
                                         "--method", "both"};
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("enumerate: tsv and json") {
    RunResult tsv = run({"enumerate", "--n", "6", "--gap", "1", "--rotsym"});
    CHECK(tsv.code == kExitOk);
    CHECK(tsv.out == "2\t001001\n3\t010101\n");

    RunResult js = run({"enumerate", "--n", "6", "--gap", "1", "--rotsym", "--format",
                        "json"});
    auto j = nlohmann::ordered_json::parse(js.out);
    CHECK(j["value"] == "2");
    CHECK(j["classes"] == nlohmann::ordered_json::array({"001001", "010101"}));
    CHECK(j["method"] == "oracle");
}

TEST_CASE("tables: listing and golden check") {
    RunResult t1 = run({"tables", "--which", "1"});
    CHECK(t1.code == kExitOk);
    CHECK(count_lines(t1.out) == 30);
    CHECK(t1.out.substr(0, 3) == "1: ");

    RunResult c1 = run({"tables", "--which", "1", "--check"});
    CHECK(c1.code == kExitOk);
    CHECK(c1.out == "table 1: 30 classes, matches the golden fixture\n");

    RunResult c2 = run({"tables", "--which", "2", "--check"});
    CHECK(c2.code == kExitOk);
    CHECK(c2.out == "table 2: 15 classes, matches the golden fixture\n");

    CHECK(run({"tables", "--which", "3"}).code == kExitUsage);
    CHECK(run({"tables"}).code == kExitUsage);  // --which is required
}

TEST_CASE("verify: all three suites pass on reduced grids") {
    RunResult lemmas =
        run({"verify", "--suite", "lemmas", "--n-max", "60", "--gap-max", "3"});
    CHECK(lemmas.code == kExitOk);
    CHECK(lemmas.out.find("lemmas suite: all checks passed") != std::string::npos);
    CHECK(lemmas.out.find("FAIL") == std::string::npos);

    RunResult cross =
        run({"verify", "--suite", "cross", "--n-max", "12", "--gap-max", "2"});
    CHECK(cross.code == kExitOk);
    CHECK(cross.out.find("all cells equal") != std::string::npos);

    RunResult ternary = run({"verify", "--suite", "ternary", "--n-max", "8"});
    CHECK(ternary.code == kExitOk);
    CHECK(ternary.out.find("ternary suite: divergence pattern as documented") !=
          std::string::npos);
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(run({"count"}).code == kExitUsage);                          // missing --n
    CHECK(run({"count", "--n", "6", "--alphabet", "4"}).code == kExitUsage);
    CHECK(run({"count", "--n", "6", "--nonsense"}).code == kExitUsage);
    CHECK(run({"bogus"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"verify", "--suite", "nope"}).code == kExitUsage);
    CHECK(run({"verify"}).code == kExitUsage);
    CHECK(run({"count", "--n", "0"}).code == kExitUsage);
    CHECK(run({"count", "--n", "12", "--gap", "1", "--k", "7", "--rotsym"}).code ==
          kExitUsage);
    CHECK(run({"enumerate", "--n", "40"}).code == kExitUsage);  // beyond word length
}

TEST_CASE("--help prints the overview and exits cleanly") {
    RunResult r = run({"--help"});
    CHECK(r.code == kExitOk);
    for (const char* word : {"count", "enumerate", "tables", "verify"})
        CHECK(r.out.find(word) != std::string::npos);
}
