#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "prolate/errors.hpp"
#include "prolate/nodes.hpp"
#include "prolate/oracle.hpp"
#include "prolate/pswf.hpp"
#include "prolate/weights.hpp"

using namespace prolate;

TEST_CASE("phi_series symmetry and parity") {
    const PswfSolution sol = solve(40.0, 41);
    // odd n: Phi~ is even
    for (double t : {0.15, 0.55, 0.92}) {
        CHECK(phi_series(sol, -t).value ==
              doctest::Approx(phi_series(sol, t).value).epsilon(1e-12));
    }
    const PswfSolution sol40 = solve(50.0, 40);
    for (double t : {0.2, 0.7}) {
        CHECK(phi_series(sol40, -t).value ==
              doctest::Approx(-phi_series(sol40, t).value).epsilon(1e-12));
    }
    CHECK_THROWS_AS(phi_series(sol, 1.0), domain_error);
}

TEST_CASE("phi_series satisfies its non-homogeneous ODE") {
    const PswfSolution sol = solve(50.0, 40);
    const double c2 = 50.0 * 50.0;
    const double a0 = sol.alpha[0];  // even n: alpha_0 active, alpha_1 = 0
    const double h = 1e-5;
    for (double t : {-0.5, -0.2, 0.2, 0.5}) {
        const PhiEval mid = phi_series(sol, t);
        const PhiEval left = phi_series(sol, t - h);
        const PhiEval right = phi_series(sol, t + h);
        const double dd = (right.value - 2.0 * mid.value + left.value) / (h * h);
        const double resid = (1.0 - t * t) * dd - 2.0 * t * mid.deriv +
                             (sol.chi - c2 * t * t) * mid.value +
                             c2 * a0 * t;
        const double scale = std::abs((sol.chi - c2 * t * t) * mid.value) +
                             std::abs(c2 * a0 * t) + 1.0;
        CHECK(std::abs(resid) <= 1e-6 * scale);
        // central difference of the value column also matches the deriv
        CHECK((right.value - left.value) / (2.0 * h) ==
              doctest::Approx(mid.deriv).epsilon(1e-7));
    }
}

TEST_CASE("direct weights reproduce the published c=40 n=41 entries") {
    const PswfSolution sol = solve(40.0, 41);
    const NodeTable tab = find_nodes(sol);
    const std::vector<double> w = weights_direct(sol, tab);
    REQUIRE(static_cast<int>(w.size()) == 41);
    CHECK(std::abs(w[0] / 0.7602931556894e-02 - 1.0) <= 1e-12);
    CHECK(std::abs(w[20] / 0.6196665001384e-01 - 1.0) <= 1e-12);
}

TEST_CASE("fast weights match direct weights, c=40 n=41") {
    const PswfSolution sol = solve(40.0, 41);
    const NodeTable tab = find_nodes(sol);
    const std::vector<double> wd = weights_direct(sol, tab);
    const std::vector<double> wf = weights_fast(sol, tab);
    double gap = 0.0;
    for (int j = 0; j < 41; ++j) gap = std::max(gap, std::abs(wd[j] - wf[j]));
    CHECK(gap <= 5e-15);

    // positivity, symmetry, and monotone growth toward the center
    for (int j = 0; j < 41; ++j) CHECK(wf[j] > 0.0);
    for (int j = 0; j < 20; ++j) CHECK(wf[j + 1] > wf[j]);
    for (int j = 0; j < 41; ++j)
        CHECK(std::abs(wf[j] - wf[40 - j]) <= 1e-12);
}

TEST_CASE("weight identity against the central weight, c=40 n=41") {
    const PswfSolution sol = solve(40.0, 41);
    const NodeTable tab = find_nodes(sol);
    const std::vector<double> w = weights_fast(sol, tab);
    const double d0 = dpsi(sol, 0.0);
    const double w_center = w[20];
    for (int j = 0; j < 41; ++j) {
        const double tj = tab.nodes[j];
        const double pred =
            w_center * d0 * d0 / (tab.dpsi[j] * tab.dpsi[j] * (1.0 - tj * tj));
        CHECK(std::abs(w[j] - pred) <= 1e-8);
    }
}

TEST_CASE("weight sum near 2, several (c, n)") {
    struct Case {
        double c;
        int n;
    };
    for (const Case cs : {Case{40.0, 41}, Case{50.0, 40}, Case{100.0, 80}}) {
        const PswfSolution sol = solve(cs.c, cs.n);
        const NodeTable tab = find_nodes(sol);
        const std::vector<double> w = weights_fast(sol, tab);
        double sum = 0.0;
        for (double wi : w) sum += wi;
        const double lam = lambda(sol).magnitude;
        CHECK(std::abs(sum - 2.0) <= 100.0 * lam + 1e-13);
    }
}

TEST_CASE("direct weights match the defining integrals, c=10 n=12") {
    const PswfSolution sol = solve(10.0, 12);
    const NodeTable tab = find_nodes(sol);
    const std::vector<double> w = weights_direct(sol, tab);
    // oracle: W_j = int psi_n(t) / (psi_n'(t_j) (t - t_j)) dt with the
    // removable singularity filled by the local expansion
    for (int j : {0, 3, 6, 11}) {
        const double tj = tab.nodes[j];
        const double dj = tab.dpsi[j];
        const double ddj =
            2.0 * tj * dj / (1.0 - tj * tj);  // psi'' at a root, from the ODE
        const double oracle_w = oracle::adaptive_integrate(
            [&](double t) {
                if (std::abs(t - tj) < 1e-4)
                    return (dj + 0.5 * ddj * (t - tj)) / dj;
                return psi(sol, t) / (dj * (t - tj));
            },
            -1.0, 1.0, {1e-11, 52, 16});
        CHECK(std::abs(w[j] - oracle_w) <= 1e-9);
    }
}

TEST_CASE("weights positive even for small n (c=10, n=8)") {
    const PswfSolution sol = solve(10.0, 8);
    const NodeTable tab = find_nodes(sol);
    for (double wi : weights_fast(sol, tab)) CHECK(wi > 0.0);
}

TEST_CASE("gauss limit") {
    CHECK(gauss_limit_check(5) <= 1e-6);
    CHECK(gauss_limit_check(12) <= 1e-6);

    // classical 5-point weights through the closed form
    const PswfSolution sol = solve(1e-8, 5);
    const NodeTable tab = find_nodes(sol);
    const std::vector<double> w = weights_fast(sol, tab);
    CHECK(std::abs(w[0] - 0.2369268850561891) <= 1e-6);
    CHECK(std::abs(w[1] - 0.4786286704993665) <= 1e-6);
    CHECK(std::abs(w[2] - 0.5688888888888889) <= 1e-6);
}
