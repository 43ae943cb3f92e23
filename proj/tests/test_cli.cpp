#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "coxfan/cli.hpp"
#include "coxfan/json_io.hpp"

using namespace coxfan;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"coxfan"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("nef json output") {
    const CliResult res = run({"nef", "--n", "2", "--r", "3", "--format", "json"});
    REQUIRE(res.code == 0);
    const Json j = Json::parse(res.out);
    CHECK(j["object"] == "nef_cone");
    CHECK(j["lattice"].size() == 5);
    CHECK(j["rays"].size() == 9);
    CHECK(j["meta"]["n"] == 2);
    CHECK(j["meta"]["r"] == 3);
}

TEST_CASE("json round-trips byte-identically") {
    for (auto args : {std::initializer_list<const char*>{"nef", "--n", "2", "--r", "4",
                                                         "--format", "json"},
                      std::initializer_list<const char*>{"mori", "--n", "3", "--r", "4",
                                                         "--format", "json"},
                      std::initializer_list<const char*>{"coxring", "--n", "3", "--seed", "1",
                                                         "--format", "json"},
                      std::initializer_list<const char*>{"mcd", "--n", "2", "--format", "json"},
                      std::initializer_list<const char*>{"delpezzo", "--degree", "3", "--format",
                                                         "json"}}) {
        const CliResult res = run(args);
        REQUIRE(res.code == 0);
        CHECK(dump(Json::parse(res.out)) == res.out);
    }
}

TEST_CASE("mcd table output ends with the chamber count") {
    const CliResult res = run({"mcd", "--n", "2"});
    REQUIRE(res.code == 0);
    CHECK(res.out.find("chambers: 92\n") != std::string::npos);
}

TEST_CASE("identical invocations are byte-identical across thread counts") {
    const CliResult a = run({"mcd", "--n", "2", "--jobs", "1", "--format", "json"});
    const CliResult b = run({"mcd", "--n", "2", "--jobs", "3", "--format", "json"});
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("seed is recorded in the meta block") {
    const CliResult res = run({"coxring", "--n", "2", "--seed", "7", "--format", "json"});
    REQUIRE(res.code == 0);
    CHECK(Json::parse(res.out)["meta"]["seed"] == 7);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({"nef", "--n", "2"}).code == 2);           // missing --r
    CHECK(run({"frobnicate"}).code == 2);                // unknown subcommand
    CHECK(run({"nef", "--n", "x", "--r", "3"}).code == 2);
    const CliResult res = run({"nef"});
    CHECK(res.code == 2);
    CHECK(res.err.rfind("ERROR:usage:", 0) == 0);
}

TEST_CASE("unsupported signatures exit 3") {
    const CliResult res = run({"nef", "--n", "5", "--r", "8"});
    CHECK(res.code == 3);
    CHECK(res.err.rfind("ERROR:unsupported-signature:", 0) == 0);
}

TEST_CASE("verify suites") {
    const CliResult ok = run({"verify", "--suite", "cones", "--n-max", "4"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("PASS cones/duality n=1,r=2") != std::string::npos);
    CHECK(ok.out.find("PASS cones/duality n=4,r=7") != std::string::npos);
    CHECK(ok.out.find("FAIL") == std::string::npos);

    const CliResult cox = run({"verify", "--suite", "cox", "--n-max", "3"});
    CHECK(cox.code == 0);

    const CliResult mcd = run({"verify", "--suite", "mcd", "--n-max", "2"});
    CHECK(mcd.code == 0);
    CHECK(mcd.out.find("PASS mcd/chamber-count n=2 (92)") != std::string::npos);
}

TEST_CASE("--out writes the payload to a file") {
    const std::string path = "cli_out_test.json";
    const CliResult res =
        run({"nef", "--n", "2", "--r", "3", "--format", "json", "--out", path.c_str()});
    REQUIRE(res.code == 0);
    CHECK(res.out.empty());
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(Json::parse(buf.str())["rays"].size() == 9);
    std::remove(path.c_str());
}

TEST_CASE("delpezzo table output") {
    const CliResult res = run({"delpezzo", "--degree", "1"});
    REQUIRE(res.code == 0);
    CHECK(res.out.find("row sizes: 8 28 56 56 56 28 8") != std::string::npos);
    CHECK(res.out.find("rays: 240") != std::string::npos);
}
