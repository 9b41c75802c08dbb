#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rahman/polyeval.hpp"
#include "rahman/serialization.hpp"

#include <json.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args)
{
    const std::string command = std::string(RAHMAN_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    size_t n = 0;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        output.append(buffer, n);
    }
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

} // namespace

TEST_CASE("eigen verification passes on a linked pair and fails on a free pair")
{
    CHECK(run_cli("verify eigen --N 3 --p 1 2 3 4 --alpha1 1/2").exit_code == 0);
    CHECK(run_cli("verify eigen --N 5 --p 1 2 3 4 --alpha 1/2 7/4").exit_code == 0);
    CHECK(run_cli("verify eigen --N 2 --p 1 2 3 4 --alpha 1/2 1/3").exit_code == 1);
}

TEST_CASE("usage errors exit with code 2")
{
    CHECK(run_cli("verify eigen --N 2 --p 1 2 3 --alpha 1/2 1/3").exit_code == 2);
    CHECK(run_cli("unknown-subcommand").exit_code == 2);
    CHECK(run_cli("polys --N 0 --p 1 2 3 4").exit_code == 2);
    CHECK(run_cli("polys --N 2 --p 1 2e 3 4").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("degenerate parameters exit with code 3")
{
    CHECK(run_cli("params --p 0 2 3 4").exit_code == 3);
    CHECK(run_cli("polys --N 2 --p 1 2 2 4").exit_code == 3);
}

TEST_CASE("params reports the derived quantities")
{
    const CliResult r = run_cli("params --p 1 2 3 4 --alpha1 1/2");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["mapped"]["t"] == "6/5");
    CHECK(j["weight"]["eta1"] == "5/18");
    CHECK(j["compatible"]["alpha2"] == "7/4");
    CHECK(j["compatible"]["alpha_linked"] == true);
}

TEST_CASE("reproduction commands pass at reference points")
{
    CHECK(run_cli("bispectral reproduce --p 1/1 2/1 3/1 4/1 -o /dev/null").exit_code == 0);
    CHECK(run_cli("commutant reproduce --alpha 1/2 1/3 --beta 1/5 1/7 -o /dev/null").exit_code == 0);
}

TEST_CASE("named-entry layout prints the reference values")
{
    const CliResult r = run_cli("bispectral solve --N 5 --p 1 2 3 4 --paper-layout");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("a_1 = -225/2") != std::string::npos);
    CHECK(r.output.find("a_21 = 5/3") != std::string::npos);
    CHECK(run_cli("bispectral solve --N 3 --p 1 2 3 4 --paper-layout").exit_code == 2);
}

TEST_CASE("polys JSON output round-trips to the exact matrix")
{
    const CliResult r = run_cli("polys --N 2 --p 1 2 3 4");
    CHECK(r.exit_code == 0);
    const rahman::Matrix parsed = rahman::matrix_from_json(nlohmann::json::parse(r.output));
    const rahman::PolyValueMatrix poly = rahman::build_poly_matrix(2, rahman::ParamSet{1, 2, 3, 4});
    CHECK(parsed == poly.values);
}

TEST_CASE("kernel CSV emits the requested precision")
{
    const CliResult r = run_cli("kernel --N 1 --alpha 1/2 1/3 --beta 1/5 1/7 --format csv --float-digits 6");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("0.2") != std::string::npos); // beta1-driven mass
}

TEST_CASE("simulation is byte-identical under a fixed seed and reports the generator")
{
    const std::string args =
        "simulate --N 2 --alpha 1/2 1/3 --beta 1/5 1/7 --steps 20000 --seed 42 "
        "--chi-square --min-visits 500";
    const CliResult a = run_cli(args);
    const CliResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    const auto j = nlohmann::json::parse(a.output);
    CHECK(j["rng"] == "mt19937_64/53bit");
    CHECK(j["chi_square"]["pass"] == true);
}

TEST_CASE("commutant discovery reports dimension two at N=3")
{
    const CliResult r = run_cli("commutant discover --N 3 --alpha 1/2 1/3 --beta 1/5 1/7");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["dimension"] == 2);
    CHECK(j["identity_in_span"] == true);
    CHECK(j["dimension_jump"] == false);
}

TEST_CASE("anchored discovery gauge-fixes a representative")
{
    const CliResult r = run_cli(
        "commutant discover --N 3 --alpha 1/2 1/3 --beta 1/5 1/7 --anchors 9 9 0 0 4 3");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["normalized"]["entries"][0][1] == "14/5");
    CHECK(j["normalized"]["entries"][0][4] == "3/1");
    CHECK(j["normalized"]["entries"][9][9] == "0/1");

    CHECK(run_cli("commutant discover --N 3 --alpha 1/2 1/3 --beta 1/5 1/7 "
                  "--anchors 0 1 1 1 0 1").exit_code == 1); // off-diagonal pair: unsolvable
    CHECK(run_cli("commutant discover --N 3 --alpha 1/2 1/3 --beta 1/5 1/7 "
                  "--anchors x 9 0 0 4 3").exit_code == 2);
}

TEST_CASE("unwritable output path exits with code 2")
{
    CHECK(run_cli("params --p 1 2 3 4 -o /nonexistent-dir/out.json").exit_code == 2);
}
