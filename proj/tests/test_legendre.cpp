#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "prolate/errors.hpp"
#include "prolate/legendre.hpp"
#include "prolate/oracle.hpp"

using namespace prolate;

namespace {

// Independent route to Q_n on (-1,1): the classical sum
//   Q_n(x) = P_n(x) Q_0(x) - sum_{m=1..n} (1/m) P_{m-1}(x) P_{n-m}(x),
// built only from P values and atanh.
double q_oracle(int n, double x) {
    const LegendreEval pe = eval_P(n, x);
    double w = 0.0;
    for (int m = 1; m <= n; ++m)
        w += pe.values[m - 1] * pe.values[n - m] / m;
    return pe.values[n] * std::atanh(x) - w;
}

// Closed forms for low orders.
double p_closed(int k, double x) {
    switch (k) {
        case 0: return 1.0;
        case 1: return x;
        case 2: return 0.5 * (3 * x * x - 1);
        default: return 0.0;
    }
}

double q_closed(int k, double x) {
    const double a = std::atanh(x);
    switch (k) {
        case 0: return a;
        case 1: return x * a - 1.0;
        case 2: return 0.5 * (3 * x * x - 1) * a - 1.5 * x;
        default: return 0.0;
    }
}

}  // namespace

TEST_CASE("eval_P examples") {
    auto at_one = eval_P(3, 1.0);
    for (int k = 0; k <= 3; ++k) CHECK(at_one.values[k] == doctest::Approx(1.0));

    auto half = eval_P(2, 0.5);
    CHECK(half.values[0] == doctest::Approx(1.0));
    CHECK(half.values[1] == doctest::Approx(0.5));
    CHECK(half.values[2] == doctest::Approx(-0.125));

    auto neg = eval_P(1, -0.3);
    CHECK(neg.values[0] == doctest::Approx(1.0));
    CHECK(neg.values[1] == doctest::Approx(-0.3));

    CHECK_THROWS_AS(eval_P(3, 1.5), domain_error);
}

TEST_CASE("eval_Q examples") {
    auto q0 = eval_Q(1, 0.0);
    CHECK(q0.values[0] == doctest::Approx(0.0));
    CHECK(q0.values[1] == doctest::Approx(-1.0));

    auto qh = eval_Q(0, 0.5);
    CHECK(qh.values[0] == doctest::Approx(0.5493061443340548).epsilon(1e-14));

    // Recurrence vs the independent Neumann-style sum at a point near 1.
    auto q9 = eval_Q(2, 0.9);
    CHECK(std::isfinite(q9.values[2]));
    CHECK(q9.values[2] == doctest::Approx(q_oracle(2, 0.9)).epsilon(1e-13));

    CHECK_THROWS_AS(eval_Q(1, 1.0), domain_error);
    CHECK_THROWS_AS(eval_Q(1, -1.0), domain_error);
}

TEST_CASE("normalize_factor") {
    CHECK(normalize_factor(0) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK(normalize_factor(2) == doctest::Approx(std::sqrt(2.5)).epsilon(1e-15));
    // Unit L2 norm of the normalized polynomials, by oracle integration.
    for (int k = 0; k <= 10; ++k) {
        const double f = normalize_factor(k);
        const double nrm = oracle::adaptive_integrate(
            [k, f](double x) {
                const double p = eval_P(k, x).values[k] * f;
                return p * p;
            },
            -1.0, 1.0);
        CHECK(nrm == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("closed forms on a grid") {
    for (int i = 0; i <= 100; ++i) {
        const double x = -0.99 + 1.98 * i / 100.0;
        auto pe = eval_P(2, x);
        auto qe = eval_Q(2, x);
        for (int k = 0; k <= 2; ++k) {
            CHECK(std::abs(pe.values[k] - p_closed(k, x)) <= 1e-14);
            CHECK(std::abs(qe.values[k] - q_closed(k, x)) <= 1e-14 *
                      std::max(1.0, std::abs(q_closed(k, x))));
        }
    }
}

TEST_CASE("ODE residual for P and Q up to k=50") {
    // Second derivative out of the differentiated derivative relation:
    //   (1-x^2) y_k'' = k (y_{k-1}' - y_k - x y_k') + 2 x y_k'.
    for (double x : {-0.9, -0.5, 0.5, 0.9}) {
        auto pe = eval_P(50, x);
        auto qe = eval_Q(50, x);
        for (const auto* e : {&pe, &qe}) {
            for (int k = 1; k <= 50; ++k) {
                const double y = e->values[k];
                const double dy = e->derivs[k];
                const double ddy =
                    (k * (e->derivs[k - 1] - y - x * dy) + 2 * x * dy) /
                    (1 - x * x);
                const double resid =
                    (1 - x * x) * ddy - 2 * x * dy + k * (k + 1) * y;
                CHECK(std::abs(resid) <= 1e-9 * (1.0 + std::abs(ddy)));
            }
        }
    }
}

TEST_CASE("parity of P") {
    for (int i = 0; i < 40; ++i) {
        const double x = -1.0 + 2.0 * i / 39.0;
        auto plus = eval_P(12, x);
        auto minus = eval_P(12, -x);
        for (int k = 0; k <= 12; ++k) {
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            CHECK(std::abs(minus.values[k] - sign * plus.values[k]) <= 1e-15);
        }
    }
}

TEST_CASE("endpoint derivatives of P") {
    auto pe = eval_P(6, 1.0);
    auto ne = eval_P(6, -1.0);
    for (int k = 0; k <= 6; ++k) {
        CHECK(pe.derivs[k] == doctest::Approx(0.5 * k * (k + 1)).epsilon(1e-15));
        const double sign = (k % 2 == 1) ? 1.0 : -1.0;
        CHECK(ne.derivs[k] ==
              doctest::Approx(sign * 0.5 * k * (k + 1)).epsilon(1e-15));
    }
}
