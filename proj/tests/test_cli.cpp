#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#ifndef QG_CLI_PATH
#error "QG_CLI_PATH must point at the built qg binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(QG_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe) != nullptr) out += buf.data();
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("poincare output", "[cli]") {
    const auto r = run_cli("poincare -t R -n 3 -e 1,2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "P(Gr_(1,2)(R3)) = [1,2,1]  chi = 4  dim = 2\n");

    const auto csv = run_cli("--format csv poincare -t R -n 3 -e 1,2");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output == "i,b_2i\n0,1\n1,2\n2,1\n");
}

TEST_CASE("JSON envelope round-trips byte-identically", "[cli]") {
    for (const char* args :
         {"poincare -t R -n 5 -e 0,2", "cells -n 3 -e 1,2", "cluster z -n 2",
          "strata -n 4 -e 2,2", "count-fq -t R -n 2 -e 1,1 -q 3"}) {
        const auto r = run_cli(std::string("--format json ") + args);
        REQUIRE(r.exit_code == 0);
        const auto parsed = nlohmann::json::parse(r.output);
        CHECK(parsed.dump(2) + "\n" == r.output);
        CHECK(parsed.contains("command"));
        CHECK(parsed.contains("engine_version"));
        CHECK(parsed.contains("parameters"));
        CHECK(parsed.contains("result"));
    }
}

TEST_CASE("cells verdicts", "[cli]") {
    const auto r = run_cli("--format json cells -n 4 -e 2,2");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["result"]["match"] == true);
    CHECK(j["result"]["poincare_from_cells"] == j["result"]["poincare_closed_form"]);

    const auto one_cell = run_cli("cells -n 2 -e 1,1");
    CHECK(one_cell.exit_code == 0);
    CHECK(one_cell.output.find("R1@2  dim 0") != std::string::npos);
    CHECK(one_cell.output.find("MATCH") != std::string::npos);
}

TEST_CASE("count-fq verdict and bounds", "[cli]") {
    const auto good = run_cli("count-fq -t R -n 3 -e 1,2 -q 2");
    CHECK(good.exit_code == 0);
    CHECK(good.output.find("= 9") != std::string::npos);
    CHECK(good.output.find("MATCH") != std::string::npos);

    CHECK(run_cli("count-fq -t R -n 2 -e 1,1 -q 3").output.find("= 1") !=
          std::string::npos);
    CHECK(run_cli("count-fq -t R -n 6 -e 3,3 -q 5").exit_code == 3);
}

TEST_CASE("cluster subcommands", "[cli]") {
    const auto z = run_cli("cluster z -n 1");
    CHECK(z.exit_code == 0);
    CHECK(z.output.find("x1^-1*x2^-1 + x1*x2^-1 + x1^-1*x2") != std::string::npos);
    CHECK(z.output.find("EQUAL") != std::string::npos);

    const auto var = run_cli("cluster var -k 3");
    CHECK(var.exit_code == 0);
    CHECK(var.output == "x1^-1 + x1^-1*x2^2\n");

    const auto u = run_cli("cluster u -n 1");
    CHECK(u.exit_code == 0);
    CHECK(u.output.find("EQUAL") != std::string::npos);

    const auto s = run_cli("cluster s -n 0");
    CHECK(s.exit_code == 0);
    CHECK(s.output == "1\n");

    const auto cc = run_cli("cluster cc --rep P1");
    CHECK(cc.exit_code == 0);
    CHECK(cc.output == run_cli("cluster var -k -1").output);
}

TEST_CASE("usage errors exit with code 2", "[cli]") {
    CHECK(run_cli("poincare -t X -n 1 -e 1,2").exit_code == 2);
    CHECK(run_cli("poincare -t R -n 3 -e '1;2'").exit_code == 2);
    CHECK(run_cli("poincare -t R -e 1,2").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("poincare -t R -n 40 -e 1,2").exit_code == 2);
    CHECK(run_cli("euler --rep R0 -e 0,0").exit_code == 2);
    CHECK(run_cli("euler -e 1,2").exit_code == 2);
    CHECK(run_cli("cluster cc").exit_code == 2);
    CHECK(run_cli("fixed-points -t R -n 0 -e 0,0").exit_code == 2);
}

TEST_CASE("euler subcommand handles descriptors", "[cli]") {
    const auto single = run_cli("euler -t R -n 3 -e 1,2");
    CHECK(single.exit_code == 0);
    CHECK(single.output.find("= 4") != std::string::npos);

    const auto sum = run_cli("euler --rep 2*P0 -e 0,1");
    CHECK(sum.exit_code == 0);
    CHECK(sum.output.find("= 2") != std::string::npos);
}

TEST_CASE("fixed-points listing", "[cli]") {
    const auto r = run_cli("--format json fixed-points -t R -n 3 -e 1,2");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["result"]["count"] == 4);
    CHECK(j["result"]["fixed_points"][0]["s1"] == nlohmann::json::array({1}));
}

TEST_CASE("selftest reports every criterion and passes", "[cli]") {
    const auto r = run_cli("selftest");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("FAIL") == std::string::npos);
    for (int id = 1; id <= 12; ++id)
        CHECK(r.output.find("PASS " + std::string(id < 10 ? " " : "") +
                            std::to_string(id)) != std::string::npos);
}

TEST_CASE("environment variable overrides the format", "[cli]") {
    const std::string cmd = std::string("QG_FORMAT=json ") + QG_CLI_PATH +
                            " poincare -t R -n 2 -e 1,1 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe) != nullptr) out += buf.data();
    pclose(pipe);
    CHECK(nlohmann::json::parse(out)["result"]["coefficients"] ==
          nlohmann::json::array({1}));
}
