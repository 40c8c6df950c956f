#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "prolate/errors.hpp"
#include "prolate/oracle.hpp"
#include "prolate/pswf.hpp"
#include "prolate/tridiag.hpp"

using namespace prolate;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("solve at the c->0 surrogate reduces to Legendre") {
    const PswfSolution sol = solve(1e-8, 3);
    CHECK(sol.chi == doctest::Approx(12.0).epsilon(1e-6));
    // beta is (nearly) the unit vector on the k=3 coefficient, class index 1
    CHECK(std::abs(sol.beta[1]) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sol.beta[1] > 0.0);  // psi(1) > 0 convention
    CHECK(std::abs(sol.beta[0]) <= 1e-10);

    // psi_2(0) = normalized P_2 at 0
    const PswfSolution sol2 = solve(1e-8, 2);
    CHECK(psi(sol2, 0.0) ==
          doctest::Approx(-0.5 * std::sqrt(2.5)).epsilon(1e-10));
}

TEST_CASE("chi_40 for c=50: bracket and dense-oracle agreement") {
    const PswfSolution sol = solve(50.0, 40);
    CHECK(sol.chi > 1640.0);
    CHECK(sol.chi < 1640.0 + 2500.0);

    const SymTridiag T500 = build_prolate_matrix(50.0, Parity::even, 500);
    const auto spectrum = oracle::full_spectrum(T500, 1e-14);
    CHECK(std::abs(sol.chi - spectrum[20]) <= 1e-12 * sol.chi);

    // coefficient norm
    double norm2 = 0.0;
    for (double b : sol.beta) norm2 += b * b;
    CHECK(std::abs(norm2 - 1.0) <= 1e-13);
}

TEST_CASE("psi parity and normalization, c=50 n=40") {
    const PswfSolution sol = solve(50.0, 40);
    for (double x : {0.1, 0.37, 0.62, 0.95, 1.0}) {
        CHECK(std::abs(psi(sol, -x) - psi(sol, x)) <=
              1e-13 * std::max(1.0, std::abs(psi(sol, x))));
        CHECK(std::abs(dpsi(sol, -x) + dpsi(sol, x)) <=
              1e-12 * std::max(1.0, std::abs(dpsi(sol, x))));
    }
    const PswfSolution sol41 = solve(50.0, 41);
    for (double x : {0.2, 0.8}) {
        CHECK(std::abs(psi(sol41, -x) + psi(sol41, x)) <=
              1e-13 * std::max(1.0, std::abs(psi(sol41, x))));
    }

    const double nrm = oracle::adaptive_integrate(
        [&sol](double x) {
            const double p = psi(sol, x);
            return p * p;
        },
        -1.0, 1.0, {1e-11, 48, 16});
    CHECK(std::abs(nrm - 1.0) <= 1e-10);

    CHECK_THROWS_AS(psi(sol, 1.0000001), domain_error);
}

TEST_CASE("psi batch equals pointwise") {
    const PswfSolution sol = solve(20.0, 7);
    std::vector<double> xs;
    for (int i = 0; i <= 33; ++i) xs.push_back(-1.0 + 2.0 * i / 33.0);
    std::vector<double> f(xs.size()), df(xs.size());
    psi_many(sol, xs, f, df);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        CHECK(f[i] == doctest::Approx(psi(sol, xs[i])).epsilon(1e-13));
        CHECK(df[i] == doctest::Approx(dpsi(sol, xs[i])).epsilon(1e-13));
    }
}

TEST_CASE("lambda magnitudes against published values") {
    CHECK(lambda(solve(50.0, 40)).magnitude ==
          doctest::Approx(1.2915e-4).epsilon(1e-3));
    CHECK(lambda(solve(40.0, 41)).magnitude ==
          doctest::Approx(6.9857e-9).epsilon(1e-3));
    CHECK(lambda(solve(40.0, 41)).phase_exponent == 1);
    CHECK(lambda(solve(1000.0, 682)).magnitude ==
          doctest::Approx(6.0352e-16).epsilon(1e-3));
    CHECK(lambda(solve(1000.0, 682)).phase_exponent == 2);
}

TEST_CASE("mu") {
    const PswfSolution sol = solve(50.0, 40);
    const double m = mu(sol);
    CHECK(m == doctest::Approx(50.0 / (2 * kPi) * 1.2915e-4 * 1.2915e-4)
                   .epsilon(2e-3));
    CHECK(m < 1.0);
    // below 2c/pi the mu's sit within ~1e-44 of 1, so allow rounding slack
    for (int n : {0, 5, 31, 33}) CHECK(mu(solve(50.0, n)) < 1.0 + 1e-12);

    // c->0 check against the sinc-kernel integral at x=0:
    // mu_0 psi_0(0) = (1/pi) int sin(c t)/t psi_0(t) dt
    const PswfSolution s0 = solve(1e-8, 0);
    const double c = 1e-8;
    const double integral = oracle::adaptive_integrate(
        [&s0, c](double t) {
            const double kernel = (std::abs(t) < 1e-30) ? c : std::sin(c * t) / t;
            return kernel * psi(s0, t);
        },
        -1.0, 1.0, {1e-22, 48, 16});
    const double mu_oracle = integral / (kPi * psi(s0, 0.0));
    CHECK(mu(s0) == doctest::Approx(mu_oracle).epsilon(1e-6));
}

TEST_CASE("lambda_upper_bound") {
    const double xi = lambda_upper_bound(100.0, 76, 10.0);
    CHECK(xi == doctest::Approx(7056.0 * 100.0 *
                                std::exp(-10.0 * (1.0 - 10.0 / (200.0 * kPi))))
                    .epsilon(1e-14));
    CHECK_THROWS_AS(lambda_upper_bound(10.0, 76, 5.0), domain_error);
    CHECK_THROWS_AS(lambda_upper_bound(100.0, 76, 2.0), domain_error);
    CHECK_THROWS_AS(lambda_upper_bound(100.0, 64, 10.0), domain_error);

    // the bound really does dominate |lambda_n| at the smallest admissible n
    CHECK(lambda(solve(100.0, 76)).magnitude < xi);
}

TEST_CASE("chi ordering and the c^2 threshold, c=50") {
    double prev = -1.0;
    for (int n = 0; n <= 60; ++n) {
        const double chi = solve(50.0, n).chi;
        CHECK(chi > prev);
        prev = chi;
        const double threshold = 2.0 * 50.0 / kPi;  // ~31.83
        if (n >= std::ceil(threshold)) CHECK(chi > 2500.0);
        if (n <= std::floor(threshold) - 1) CHECK(chi < 2500.0);
    }
}

TEST_CASE("root count by sign changes, c=20") {
    const double c = 20.0;
    for (int n : {1, 4, 13, 30}) {
        const PswfSolution sol = solve(c, n);
        const int pts = 10 * (n + 10);
        std::vector<double> xs(pts), f(pts);
        for (int i = 0; i < pts; ++i) xs[i] = -1.0 + 2.0 * (i + 0.5) / pts;
        psi_many(sol, xs, f, {});
        int changes = 0;
        for (int i = 1; i < pts; ++i)
            if ((f[i] > 0) != (f[i - 1] > 0)) ++changes;
        CHECK(changes == n);
    }
}

TEST_CASE("orthogonality spot check, c=20") {
    const PswfSolution s2 = solve(20.0, 2);
    const PswfSolution s6 = solve(20.0, 6);
    const double ip = oracle::adaptive_integrate(
        [&](double x) { return psi(s2, x) * psi(s6, x); }, -1.0, 1.0,
        {1e-11, 48, 16});
    CHECK(std::abs(ip) <= 1e-10);
}

TEST_CASE("integral operator residual spot check, c=20 n=2") {
    const PswfSolution sol = solve(20.0, 2);
    const LambdaValue lv = lambda(sol);
    // lambda_2 = -|lambda_2| (phase i^2)
    const double x = 0.3;
    const double re = oracle::adaptive_integrate(
        [&](double t) { return psi(sol, t) * std::cos(20.0 * x * t); }, -1.0,
        1.0, {1e-12, 48, 16});
    const double im = oracle::adaptive_integrate(
        [&](double t) { return psi(sol, t) * std::sin(20.0 * x * t); }, -1.0,
        1.0, {1e-12, 48, 16});
    const double lam_re = -lv.magnitude;
    const double resid = std::hypot(lam_re * psi(sol, x) - re, im);
    CHECK(resid <= 1e-10 * (1.0 + lv.magnitude));
}

TEST_CASE("n selection for c=250, eps=1e-10") {
    const double c = 250.0;
    const double eps = 1e-10;
    const int n1 = n_for_precision(c, eps, NRule::n1);
    CHECK(n1 == 184);
    CHECK(n_for_precision(c, eps, NRule::n3) == 277);
    CHECK(n_for_precision(c, eps, NRule::n4) == 303);
    CHECK(n2_for_precision(c, eps) == 198);

    // selection-table convention: the order n1 is paired with the
    // eigenvalue of index n1 + 1
    const double lam_n1 = lambda(solve(c, n1 + 1)).magnitude;
    CHECK(lam_n1 == doctest::Approx(0.60576e-10).epsilon(1e-3));
    CHECK(lam_n1 < eps);
    CHECK(lambda(solve(c, n1)).magnitude >= eps);

    // threshold tightening only increases n2 (value from the same table)
    CHECK(n2_for_precision(c, 1e-25) == 227);
}

TEST_CASE("n rule preconditions") {
    CHECK_THROWS_AS(n_for_precision(20.0, 1e-10, NRule::n3), domain_error);
    CHECK_THROWS_AS(n_for_precision(50.0, 1e-10, NRule::n4), domain_error);
    CHECK_THROWS_AS(n2_for_precision(20.0, 1e-10), domain_error);
    CHECK_THROWS_AS(n_for_precision(250.0, 2.0, NRule::n1), domain_error);
}
