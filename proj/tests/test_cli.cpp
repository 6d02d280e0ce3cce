#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

using json = nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(MHQ_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("transition prints the critical value") {
    RunResult r = run_cli("transition");
    CHECK(r.code == 0);
    CHECK(r.out.find("4.10938817869357581") != std::string::npos);
}

TEST_CASE("zeros output and localization report") {
    RunResult r = run_cli("zeros --n 1 --c 15 --format json");
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["meta"]["counts"]["i1"] == 1);
    CHECK(doc["meta"]["counts"]["i2"] == 1);
    CHECK(doc["meta"]["counts"]["i3"] == 1);
    CHECK(doc["meta"]["counts"]["outside"] == 0);
    REQUIRE(doc["rows"].size() == 3);
    std::string last = doc["rows"][2][1];
    CHECK(last.substr(0, 8) == "7.599342");
}

TEST_CASE("rule CSV header and determinism") {
    RunResult a = run_cli("rule --n 2 --c 15");
    RunResult b = run_cli("rule --n 2 --c 15");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    std::istringstream is(a.out);
    std::string meta_line, header;
    std::getline(is, meta_line);
    std::getline(is, header);
    CHECK(meta_line.rfind("# {", 0) == 0);
    CHECK(header == "k,node,lambda_1,lambda_2,lambda_3");
    int rows = 0;
    std::string line;
    while (std::getline(is, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 6);
}

TEST_CASE("rule reproduces the reference first weight") {
    RunResult r = run_cli("rule --n 10 --c 15 --format json");
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    std::string lam1 = doc["rows"][0][2];
    CHECK(lam1.substr(0, 11) == "6.887653864");  // 6.887653865e-9 to table precision
}

TEST_CASE("chat resolves to c = chat*sqrt(n)") {
    RunResult a = run_cli("zeros --n 4 --c 12 --format json");
    RunResult b = run_cli("zeros --n 4 --chat 6 --format json");
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    CHECK(json::parse(a.out)["rows"] == json::parse(b.out)["rows"]);
}

TEST_CASE("density emits the support header") {
    RunResult r = run_cli("density --chat 6 --samples 11 --format json");
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["meta"]["phase"] == "three-interval");
    CHECK(doc["meta"]["cstar"].get<std::string>().substr(0, 10) == "4.10938817");
    CHECK(doc["columns"] == json({"x", "v", "nu1", "nu2", "nu3"}));
    CHECK(doc["rows"].size() == 11);

    RunResult one = run_cli("density --chat 2 --samples 5 --format json");
    REQUIRE(one.code == 0);
    json onedoc = json::parse(one.out);
    CHECK(onedoc["meta"]["phase"] == "one-interval");
    CHECK(onedoc["rows"][2][2] == "");  // no component decomposition below c*
}

TEST_CASE("atomic file output") {
    std::string path = "/tmp/mhquad_test_rule.csv";
    std::remove(path.c_str());
    RunResult r = run_cli("rule --n 1 --c 15 --out " + path);
    REQUIRE(r.code == 0);
    std::ifstream is(path);
    REQUIRE(is.good());
    std::string first;
    std::getline(is, first);
    CHECK(first.rfind("# {", 0) == 0);
    std::remove(path.c_str());
}

TEST_CASE("poly reports both methods") {
    RunResult r = run_cli("poly --n 1,1 --c 3,-7 --format json");
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["rows"].size() == 3);
    std::string disc = doc["meta"]["cross_method_max_rel_discrepancy"];
    CHECK(!disc.empty());
}

TEST_CASE("exit codes") {
    CHECK(run_cli("bogus-subcommand").code == 2);
    CHECK(run_cli("zeros --n 1").code == 2);         // neither --c nor --chat
    CHECK(run_cli("zeros --n 1 --c 15 --chat 6").code == 2);
    CHECK(run_cli("transition --precision 10").code == 2);
    CHECK(run_cli("poly --n 1,1 --c 5,5").code == 2);  // shifts must be distinct
}

TEST_CASE("precision flag changes emitted digits") {
    RunResult r = run_cli("transition --precision 40 --format json");
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["meta"]["precision"] == 40);
}

TEST_CASE("check suite runs the identities") {
    RunResult r = run_cli("check --suite identities");
    CHECK(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["all_pass"] == true);
    CHECK(doc["criteria"].size() == 1);
    CHECK(doc["criteria"][0]["id"] == 13);
}

TEST_CASE("environment variable sets the default precision") {
    std::string cmd = "MHQUAD_PRECISION=40 " + std::string(MHQ_CLI_PATH) +
                      " transition --format json 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::string out;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    pclose(pipe);
    json doc = json::parse(out);
    CHECK(doc["meta"]["precision"] == 40);
}

TEST_CASE("potentials dump") {
    RunResult r = run_cli("potentials --chat 6 --n 2 --format json");
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["columns"].size() == 10);
    CHECK(doc["rows"].size() == 241);
    CHECK(doc["meta"]["ell"].size() == 3);
    // below the transition there is no decomposition to dump
    CHECK(run_cli("potentials --chat 2 --n 2").code == 2);
}
