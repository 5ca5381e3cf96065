#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "mbfix/mbf.hpp"

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = mbfix::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("fix command") {
    const Result text = run({"fix", "--perm", "(12)(34)", "--n", "4"});
    CHECK(text.code == 0);
    CHECK(text.out.find("count 28") != std::string::npos);

    const Result js = run({"fix", "--perm", "(12)(34)", "--n", "4", "--format", "json"});
    REQUIRE(js.code == 0);
    const auto j = nlohmann::json::parse(js.out);
    CHECK(j["count"] == "28");
    CHECK(j["perm"] == "(12)(34)");
    CHECK(j["n"] == 4);
    CHECK(j["mu"] == "3");
    CHECK(j["cycle_type"] == nlohmann::json::array({2, 2}));
    CHECK(j["decomposition"].is_array());
    CHECK(j["elapsed_ms"].is_number());
    // Re-serializing parsed output is byte-identical.
    CHECK(j.dump() + "\n" == js.out);
}

TEST_CASE("dn command") {
    CHECK(run({"dn", "--n", "5"}).out == "7581\n");
    CHECK(nlohmann::json::parse(run({"dn", "--n", "3", "--format", "json"}).out)["d_n"] == "20");
    const auto path = std::filesystem::temp_directory_path() / "mbfix_cli_d3.mbf";
    CHECK(run({"dn", "--n", "3", "--save", path.string()}).code == 0);
    CHECK(mbfix::load_family(path).size() == 20);
    std::filesystem::remove(path);
    CHECK(run({"dn", "--n", "8"}).code == 2);
}

TEST_CASE("rn command") {
    const Result r = run({"rn", "--n", "4", "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["r_n"] == "30");
    const Result refused = run({"rn", "--n", "8"});
    CHECK(refused.code == 2);
    CHECK(refused.err.find("(12)") != std::string::npos);
}

TEST_CASE("verify-tables command") {
    const Result r = run({"verify-tables", "--n-min", "3", "--n-max", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("MISMATCH") == std::string::npos);
    const Result j = run({"verify-tables", "--n-min", "3", "--n-max", "3", "--format", "json"});
    CHECK(nlohmann::json::parse(j.out)["ok"] == true);
    CHECK(run({"verify-tables", "--n-min", "1"}).code == 64);
}

TEST_CASE("dump commands") {
    const Result p = run({"dump-poset", "--perm", "(12)", "--n", "3"});
    REQUIRE(p.code == 0);
    CHECK(nlohmann::json::parse(p.out)["size"] == 6);
    const Result m = run({"dump-matrix", "--perm", "(12)", "--n", "2", "--power", "2"});
    CHECK(m.out == "1,2,3\n0,1,2\n0,0,1\n");
    CHECK(run({"dump-matrix", "--of", "dn", "--n", "1"}).out == "1,1,1\n0,1,1\n0,0,1\n");
    CHECK(nlohmann::json::parse(run({"dump-poset", "--of", "fix", "--perm", "(12)", "--n", "2"}).out)["size"] == 4);
    CHECK(run({"dump-poset", "--n", "3"}).code == 64);
}

TEST_CASE("gen-fix command") {
    const Result r = run({"gen-fix", "--perm", "(12)", "--n", "2"});
    CHECK(r.out == "0000\n0001\n0111\n1111\n");
    const auto j = nlohmann::json::parse(run({"gen-fix", "--perm", "(12)", "--n", "3", "--format", "json"}).out);
    CHECK(j["count"] == "10");
    CHECK(j["functions"].size() == 10);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 64);
    CHECK(run({"fix", "--n", "4"}).code == 64);
    CHECK(run({"fix", "--perm", "(12", "--n", "4"}).code == 64);
    CHECK(run({"fix", "--perm", "(12)", "--n", "4", "--method", "magic"}).code == 64);
    CHECK(run({"fix", "--perm", "(12)", "--n", "4", "--format", "xml"}).code == 64);
    CHECK(run({"frobnicate"}).code == 64);
    CHECK(run({"fix", "--perm", "(12)", "--n", "8"}).code == 2);
    CHECK(run({"fix", "--perm", "(12)", "--n", "6", "--method", "bruteforce"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output does not depend on --threads") {
    auto strip = [](std::string s) {
        auto j = nlohmann::json::parse(s);
        j.erase("elapsed_ms");
        return j.dump();
    };
    const auto one = run({"--threads", "1", "fix", "--perm", "(12)(34)", "--n", "7", "--format", "json"});
    const auto four = run({"--threads", "4", "fix", "--perm", "(12)(34)", "--n", "7", "--format", "json"});
    CHECK(strip(one.out) == strip(four.out));
    CHECK(run({"--threads", "1", "rn", "--n", "6"}).out == run({"--threads", "3", "rn", "--n", "6"}).out);
    CHECK(run({"--threads", "1", "verify-tables", "--n-min", "5", "--n-max", "6"}).out ==
          run({"--threads", "4", "verify-tables", "--n-min", "5", "--n-max", "6"}).out);
}
