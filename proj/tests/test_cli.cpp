#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "prolate/quadrature.hpp"
#include "prolate/rule_io.hpp"

using namespace prolate;

TEST_CASE("csv serialization shape") {
    const QuadratureRule rule = build_rule(40.0, 41);
    std::ostringstream os;
    write_rule_csv(rule, os);
    const std::string text = os.str();

    // header line then 41 data rows
    CHECK(text.find("j,t,w\n") != std::string::npos);
    int rows = 0;
    std::istringstream is(text);
    std::string line;
    bool in_data = false;
    std::string first_row;
    while (std::getline(is, line)) {
        if (in_data && !line.empty()) {
            if (rows == 0) first_row = line;
            ++rows;
        }
        if (line == "j,t,w") in_data = true;
    }
    CHECK(rows == 41);
    CHECK(first_row.substr(0, 2) == "1,");
    CHECK(first_row.find("7.60293155") != std::string::npos);
}

TEST_CASE("json round trip is bit exact") {
    const QuadratureRule rule = build_rule(40.0, 41);
    std::ostringstream os;
    write_rule_json(rule, os);
    std::istringstream is(os.str());
    const QuadratureRule back = read_rule_json(is);

    CHECK(back.c == rule.c);
    CHECK(back.n == rule.n);
    CHECK(back.chi == rule.chi);
    CHECK(back.lam.magnitude == rule.lam.magnitude);
    CHECK(back.lam.phase_exponent == rule.lam.phase_exponent);
    REQUIRE(back.nodes.size() == rule.nodes.size());
    for (int j = 0; j < rule.n; ++j) {
        CHECK(back.nodes[j] == rule.nodes[j]);
        CHECK(back.weights[j] == rule.weights[j]);
    }
}

TEST_CASE("csv values round trip through 17-digit parsing") {
    const QuadratureRule rule = build_rule(40.0, 41);
    std::ostringstream os;
    write_rule_csv(rule, os);
    std::istringstream is(os.str());
    std::string line;
    // skip comments and the column header
    while (std::getline(is, line) && line != "j,t,w") {
    }
    int j = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        CHECK(std::stoi(line.substr(0, c1)) == j + 1);
        CHECK(std::stod(line.substr(c1 + 1, c2 - c1 - 1)) == rule.nodes[j]);
        CHECK(std::stod(line.substr(c2 + 1)) == rule.weights[j]);
        ++j;
    }
    CHECK(j == 41);
}

TEST_CASE("eval semantics used by the CLI") {
    // x = 0 for odd n prints a zero of psi
    const PswfSolution sol = solve(41.0, 41);
    CHECK(std::abs(psi(sol, 0.0)) <= 1e-13);
    // parity relation between the +-x rows
    CHECK(psi(sol, -0.5) == doctest::Approx(-psi(sol, 0.5)).epsilon(1e-12));

    // determinism under a fixed seed
    const PswfSolution again = solve(41.0, 41);
    CHECK(psi(sol, 0.37) == psi(again, 0.37));
    const PswfSolution other_seed = solve(41.0, 41, 99);
    CHECK(psi(other_seed, 0.37) ==
          doctest::Approx(psi(sol, 0.37)).epsilon(1e-13));
}
