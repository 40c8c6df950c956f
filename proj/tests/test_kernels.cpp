#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "prolate/kernels.hpp"

using namespace prolate::kernels;

namespace {

std::uint64_t xs(std::uint64_t& s) {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
}

double uniform(std::uint64_t& s, double lo, double hi) {
    return lo + (hi - lo) * ((xs(s) >> 11) * 0x1.0p-53);
}

}  // namespace

TEST_CASE("scalar series kernel against direct evaluation") {
    // coefficients on P_1, P_3, P_5
    std::vector<double> coef = {0.7, -0.3, 0.11};
    std::vector<double> x = {-0.9, -0.25, 0.0, 0.6, 1.0};
    std::vector<double> f(x.size()), df(x.size());
    detail::legendre_series_batch_scalar(coef, 1, x, f, df);
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double t = x[j];
        const double p1 = t, p3 = 0.5 * (5 * t * t * t - 3 * t);
        const double p5 = 0.125 * (63 * std::pow(t, 5) - 70 * t * t * t + 15 * t);
        const double d1 = 1, d3 = 0.5 * (15 * t * t - 3);
        const double d5 = 0.125 * (315 * std::pow(t, 4) - 210 * t * t + 15);
        CHECK(f[j] == doctest::Approx(0.7 * p1 - 0.3 * p3 + 0.11 * p5).epsilon(1e-14));
        CHECK(df[j] == doctest::Approx(0.7 * d1 - 0.3 * d3 + 0.11 * d5).epsilon(1e-14));
    }
}

TEST_CASE("scalar trig kernel against libm") {
    std::vector<double> w = {0.25, 0.5, 0.125, 1.5};
    std::vector<double> t = {-0.99, -0.2, 0.33, 0.9};
    double cs = 0.0, sn = 0.0;
    detail::weighted_trig_sum_scalar(w, t, 123.456, cs, sn);
    double ce = 0.0, se = 0.0;
    for (int i = 0; i < 4; ++i) {
        ce += w[i] * std::cos(123.456 * t[i]);
        se += w[i] * std::sin(123.456 * t[i]);
    }
    CHECK(cs == doctest::Approx(ce).epsilon(1e-15));
    CHECK(sn == doctest::Approx(se).epsilon(1e-15));
}

#if defined(__x86_64__)
TEST_CASE("avx2 variants match scalar reference") {
    if (!avx2_supported()) {
        MESSAGE("AVX2 not available on this machine; equivalence skipped");
        return;
    }
    std::uint64_t state = 99;

    for (int trial = 0; trial < 12; ++trial) {
        const int m = 1 + static_cast<int>(xs(state) % 600);
        const int k0 = static_cast<int>(xs(state) % 2);
        const int nx = 1 + static_cast<int>(xs(state) % 37);
        std::vector<double> coef(m), x(nx);
        double l1 = 0.0;
        for (double& a : coef) {
            a = uniform(state, -1.0, 1.0);
            l1 += std::abs(a);
        }
        for (double& xi : x) xi = uniform(state, -1.0, 1.0);

        std::vector<double> fs(nx), dfs(nx), fv(nx), dfv(nx);
        detail::legendre_series_batch_scalar(coef, k0, x, fs, dfs);
        detail::legendre_series_batch_avx2(coef, k0, x, fv, dfv);
        const int k_max = k0 + 2 * (m - 1);
        for (int j = 0; j < nx; ++j) {
            CHECK(std::abs(fs[j] - fv[j]) <= 1e-13 * (1.0 + l1));
            // derivative magnitudes grow like k^2
            CHECK(std::abs(dfs[j] - dfv[j]) <=
                  1e-13 * (1.0 + l1 * k_max * k_max));
        }
    }

    for (int trial = 0; trial < 12; ++trial) {
        const int n = 1 + static_cast<int>(xs(state) % 53);
        std::vector<double> w(n), t(n);
        double l1 = 0.0;
        for (int i = 0; i < n; ++i) {
            w[i] = uniform(state, -1.0, 1.0);
            t[i] = uniform(state, -1.0, 1.0);
            l1 += std::abs(w[i]);
        }
        const double s = uniform(state, 0.0, 2500.0);
        double cs = 0, ss = 0, cv = 0, sv = 0;
        detail::weighted_trig_sum_scalar(w, t, s, cs, ss);
        detail::weighted_trig_sum_avx2(w, t, s, cv, sv);
        CHECK(std::abs(cs - cv) <= 2e-15 * (1.0 + l1));
        CHECK(std::abs(ss - sv) <= 2e-15 * (1.0 + l1));
    }
}

TEST_CASE("vector sincos accuracy across quadrants") {
    if (!avx2_supported()) return;
    // exercised through weighted_trig_sum with unit weight, one angle at a time
    std::vector<double> w = {1.0, 0.0, 0.0, 0.0};
    for (double phase : {0.0, 0.7853, 1.5707, 2.5, 3.14159, 4.0, 5.9, 700.0,
                         12345.6, 999999.0}) {
        for (double sign : {1.0, -1.0}) {
            std::vector<double> t = {sign, 0.1, 0.2, 0.3};
            double cv = 0, sv = 0;
            detail::weighted_trig_sum_avx2(w, t, phase, cv, sv);
            CHECK(std::abs(cv - std::cos(phase * sign)) <= 4e-16);
            CHECK(std::abs(sv - std::sin(phase * sign)) <= 4e-16);
        }
    }
}
#endif

TEST_CASE("dispatch override") {
    const Isa before = active_isa();
    force_isa(Isa::scalar);
    CHECK(active_isa() == Isa::scalar);
    force_isa(before);
    CHECK(active_isa() == before);
}
