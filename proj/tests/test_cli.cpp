// End-to-end checks of the command-line surface: input normalization, output
// schemas, round trips and exit codes. The binary path comes from the
// WIGNER_UR_CLI environment variable (set by ctest).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "wigner_ur/sqrt_rational.hpp"

using nlohmann::json;

namespace {

struct CmdResult {
    int exit_code;
    std::string out;
};

std::string cli_path() {
    const char* p = std::getenv("WIGNER_UR_CLI");
    REQUIRE_MESSAGE(p != nullptr, "WIGNER_UR_CLI must point at the binary");
    return p;
}

CmdResult run(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("fraction and twice-value inputs normalize identically") {
    const auto a = run("cg 1/2 1/2 1/2 -1/2 0 0");
    const auto b = run("--twice cg 1 1 1 -1 0 0");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("+sqrt(1/2)", 0) == 0);
}

TEST_CASE("exact json output round-trips to the same value") {
    const auto res = run("sixj 1/2 1/2 1 1/2 1/2 1 --format json");
    CHECK(res.exit_code == 0);
    const json j = json::parse(res.out);
    CHECK(j["schema"] == 1);
    CHECK(j["command"] == "sixj");
    const auto parsed = wigner_ur::SqrtRational::parse(j["exact"].get<std::string>());
    REQUIRE(parsed.has_value());
    CHECK(*parsed == wigner_ur::SqrtRational::make(1, mpq_class(1, 36)));
    CHECK(j["value"].get<double>() == parsed->to_double());
}

TEST_CASE("basis json carries the fixed ordering and unit-modulus coefficients") {
    const auto res = run("basis --j 3/2 --r 0.37 --format json");
    CHECK(res.exit_code == 0);
    const json j = json::parse(res.out);
    CHECK(j["ordering"] == "m descending");
    CHECK(j["vectors"].size() == 4);
    for (const auto& v : j["vectors"]) {
        CHECK(v["coeffs"].size() == 4);
        for (const auto& c : v["coeffs"]) {
            const double re = c[0].get<double>(), im = c[1].get<double>();
            CHECK(std::abs(std::sqrt(re * re + im * im) - 0.5) < 1e-14);
        }
    }
}

TEST_CASE("csv basis output has one row per label tuple") {
    const auto res = run("basis --j 1 --r 1 --format csv");
    CHECK(res.exit_code == 0);
    CHECK(std::count(res.out.begin(), res.out.end(), '\n') == 1 + 9);
}

TEST_CASE("--out writes the payload to a file") {
    const std::string path = "/tmp/wigner_ur_cli_out.json";
    std::remove(path.c_str());
    const auto res = run("metric --j 1 --r 0 --table --format json --out " + path);
    CHECK(res.exit_code == 0);
    CHECK(res.out.empty());
    std::ifstream f(path);
    REQUIRE(f.good());
    json j;
    f >> j;
    CHECK(j["rows"].size() == 3);
    std::remove(path.c_str());
}

TEST_CASE("exit codes: usage 2, verify failure 1, success 0") {
    CHECK(run("nonsense").exit_code == 2);
    CHECK(run("cg 1/2 1/2 0 0 0 0").exit_code == 2);  // parity violation
    CHECK(run("cg 1/2 1/2").exit_code == 2);          // wrong arity
    CHECK(run("verify --suite nope").exit_code == 2);
    CHECK(run("verify --suite mub --jmax 1 --r 1").exit_code == 0);
    CHECK(run("verify --suite basis --jmax 1 --r 0.37 --tol 1e-30").exit_code == 1);
}

TEST_CASE("environment tolerance drives the verify exit status") {
    const std::string save = "WIGNER_UR_TOL=1e-30 ";
    const std::string cmd = save + cli_path() + " verify --suite basis --jmax 1 --r 0.37 " +
                            ">/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 1);
}
