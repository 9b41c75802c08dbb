#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rahman/errors.hpp"
#include "rahman/serialization.hpp"
#include "rahman/simulator.hpp"
#include "rahman/spectral.hpp"

#include "support/testutil.hpp"

#include <random>

using namespace rahman;

TEST_CASE("matrix JSON round-trip is exact")
{
    std::mt19937_64 rng(163);
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 1000);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix m(4, 3);
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 3; ++c) {
                m.at(r, c) = make_rational(num(rng), den(rng));
            }
        }
        CHECK(matrix_from_json(matrix_to_json(m)) == m);
    }
}

TEST_CASE("identity serializes with 1/1 entries")
{
    const nlohmann::json j = matrix_to_json(Matrix::identity(3));
    CHECK(j["entries"][0][0] == "1/1");
    CHECK(j["entries"][0][1] == "0/1");
    CHECK(j["rows"] == 3);
}

TEST_CASE("json keys are emitted sorted")
{
    const std::string dumped = matrix_to_json(Matrix::identity(2)).dump();
    CHECK(dumped.find("\"cols\"") < dumped.find("\"entries\""));
    CHECK(dumped.find("\"entries\"") < dumped.find("\"kind\""));
    CHECK(dumped.find("\"kind\"") < dumped.find("\"rows\""));
}

TEST_CASE("ordering metadata lists states in canonical order")
{
    const StateSpace space(2);
    const nlohmann::json j = matrix_to_json(Matrix::identity(6), space, space);
    CHECK(j["row_states"][0] == nlohmann::json::array({0, 0}));
    CHECK(j["row_states"][1] == nlohmann::json::array({1, 0}));
    CHECK(j["row_states"][3] == nlohmann::json::array({0, 1}));
}

TEST_CASE("malformed matrix JSON is rejected")
{
    CHECK_THROWS_AS(matrix_from_json(nlohmann::json::array()), ParseError);
    nlohmann::json j{{"rows", 2}, {"cols", 2}, {"entries", nlohmann::json::array()}};
    CHECK_THROWS_AS(matrix_from_json(j), ParseError);
}

TEST_CASE("csv uses the requested precision")
{
    Matrix m(1, 2);
    m.at(0, 0) = make_rational(1, 3);
    m.at(0, 1) = make_rational(-1, 2);
    CHECK(matrix_to_csv(m, 5) == "0.33333,-0.5\n");
    CHECK(matrix_to_csv(m, 2) == "0.33,-0.5\n");
}

TEST_CASE("eigen report serialization carries the pass flag and witnesses")
{
    const ParamSet p{1, 2, 3, 4};
    const EigenReport report = verify_eigen(2, p, make_rational(1, 2), make_rational(7, 4));
    const nlohmann::json j = to_json(report);
    CHECK(j["pass"] == true);
    CHECK(j["entries"].size() == 6);
    CHECK(j["entries"][0]["lambda"] == "1/1");
    CHECK(j["entries"][0]["max_residual"] == "0/1");
}

TEST_CASE("counts CSV lists nonzero transitions with coordinates")
{
    const ChainParams cp{2, make_rational(1, 2), make_rational(1, 3),
                         make_rational(1, 5), make_rational(1, 7)};
    const TransitionCounts tc = run_chain(ChainState{0, 0}, 100, cp, 5);
    const std::string csv = counts_to_csv(tc);
    CHECK(csv.rfind("source_x,source_y,target_x,target_y,count\n", 0) == 0);
    CHECK(csv.find('\n') != std::string::npos);

    const nlohmann::json summary = summary_json(tc, cp, 5, ChainState{0, 0});
    CHECK(summary["seed"] == 5);
    CHECK(summary["rng"] == kRngAlgorithm);
    CHECK(summary["steps"] == 100);
}
