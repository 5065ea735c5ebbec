#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <regex>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exitCode;
    std::string out;
};

std::string cliPath() {
    if (const char* p = std::getenv("NILALG_CLI"))
        return p;
    return "./tools/nilalg";
}

RunResult run(const std::string& args) {
    std::string cmd = cliPath() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    int rc = pclose(pipe);
    return {WEXITSTATUS(rc), out};
}

std::string stripTimings(std::string s) {
    s = std::regex_replace(s, std::regex("\\(\\d+ ms\\)"), "(ms)");
    s = std::regex_replace(s, std::regex("\"ms\": \\d+"), "\"ms\": 0");
    return s;
}

} // namespace

TEST_CASE("exit code contract") {
    CHECK(run("verify B4_10").exitCode == 0);
    CHECK(run("degeneration B4_10_to_B4_13").exitCode == 0);

    // verification failure: a certificate that does not hold
    RunResult rev = run("degeneration " + std::string(std::getenv("NILALG_TEST_DATA")) +
                        "/reversed.deg");
    CHECK(rev.exitCode == 1);
    CHECK(rev.out.find("residual") != std::string::npos);

    // input errors
    CHECK(run("verify NoSuchAlgebra").exitCode == 2);
    CHECK(run("verify " + std::string(std::getenv("NILALG_TEST_DATA")) + "/malformed.alg")
              .exitCode == 2);
    CHECK(run("nonsense-subcommand").exitCode == 2);
    CHECK(run("fingerprint B4_06 --param alpha=0").exitCode == 2); // excluded value
}

TEST_CASE("verify rejects non-nilpotent input") {
    RunResult r = run("verify " + std::string(std::getenv("NILALG_TEST_DATA")) +
                      "/idempotent.alg");
    CHECK(r.exitCode == 1);
    CHECK(r.out.find("nilpotent") != std::string::npos);
}

TEST_CASE("extend emits the algebra text with a membership trailer") {
    std::string data = std::getenv("NILALG_TEST_DATA");
    RunResult r = run("extend N1 " + data + "/d11.coc");
    CHECK(r.exitCode == 0);
    CHECK(r.out.find("e1*e1 = e2") != std::string::npos);
    CHECK(r.out.find("# non-split extension: yes") != std::string::npos);

    RunResult bad = run("extend B3_01 " + data + "/noncocycle.coc");
    CHECK(bad.exitCode == 1);
    CHECK(bad.out.find("theta(") != std::string::npos);
}

TEST_CASE("json reports round-trip and are deterministic") {
    RunResult r1 = run("cohomology B3s_02 --json");
    CHECK(r1.exitCode == 0);
    auto j = nlohmann::ordered_json::parse(r1.out);
    CHECK(j["command"] == "cohomology");
    CHECK(j["status"] == "pass");
    CHECK(j["items"][0]["subject"] == "B3s_02");
    CHECK(j["items"][0].contains("check"));
    CHECK(j["items"][0].contains("outcome"));
    CHECK(j["items"][0].contains("details"));
    // byte-identical re-serialization
    CHECK(j.dump(2) + "\n" == r1.out);

    RunResult r2 = run("cohomology B3s_02 --json");
    CHECK(stripTimings(r1.out) == stripTimings(r2.out));
}

TEST_CASE("parameters bind family members") {
    RunResult r = run("derivations B4_24 --param alpha=2");
    CHECK(r.exitCode == 0);
    CHECK(r.out.find("dim 3") != std::string::npos);
    RunResult r0 = run("derivations B4_24 --param alpha=0");
    CHECK(r0.out.find("dim 4") != std::string::npos);
}

TEST_CASE("normalization subcommand verifies a single family") {
    RunResult r = run("normalization B3_01");
    CHECK(r.exitCode == 0);
    CHECK(r.out.find("case 1") != std::string::npos);
}
