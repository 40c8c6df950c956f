#include "prolate/kernels.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <cstring>

namespace prolate::kernels {

namespace detail {

void legendre_series_batch_scalar(std::span<const double> coef, int k0,
                                  std::span<const double> x,
                                  std::span<double> out_f,
                                  std::span<double> out_df) {
    const int m = static_cast<int>(coef.size());
    const bool want_d = !out_df.empty();
    const int k_max = (m == 0) ? -1 : k0 + 2 * (m - 1);
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double t = x[j];
        // Running values P_{k-1}, P_k and derivatives, with P_{-1} = 0.
        // Derivatives advance through P'_{k+1} = P'_{k-1} + (2k+1) P_k,
        // which stays valid at t = +-1.
        double pm = 0.0, p = 1.0;
        double dm = 0.0, d = 0.0;
        double s = 0.0, ds = 0.0;
        int idx = 0;
        for (int k = 0; k <= k_max; ++k) {
            if (((k ^ k0) & 1) == 0) {
                s += coef[idx] * p;
                ds += coef[idx] * d;
                ++idx;
            }
            const double pn = ((2 * k + 1) * t * p - k * pm) / (k + 1);
            const double dn = dm + (2 * k + 1) * p;
            pm = p;
            p = pn;
            dm = d;
            d = dn;
        }
        out_f[j] = s;
        if (want_d) out_df[j] = ds;
    }
}

void weighted_trig_sum_scalar(std::span<const double> w,
                              std::span<const double> t, double s,
                              double& cos_out, double& sin_out) {
    double cs = 0.0, sn = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        const double ph = s * t[j];
        cs += w[j] * std::cos(ph);
        sn += w[j] * std::sin(ph);
    }
    cos_out = cs;
    sin_out = sn;
}

}  // namespace detail

namespace {

bool cpu_has_avx2() {
#if defined(PROLATE_HAVE_AVX2)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Isa initial_isa() {
    if (const char* env = std::getenv("PROLATE_ISA")) {
        if (std::strcmp(env, "scalar") == 0) return Isa::scalar;
        if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return Isa::avx2;
    }
    return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& isa_state() {
    static std::atomic<Isa> state{initial_isa()};
    return state;
}

}  // namespace

Isa active_isa() { return isa_state().load(std::memory_order_relaxed); }

bool avx2_supported() { return cpu_has_avx2(); }

void force_isa(Isa isa) {
    if (isa == Isa::avx2 && !cpu_has_avx2()) return;
    isa_state().store(isa, std::memory_order_relaxed);
}

void legendre_series_batch(std::span<const double> coef, int k0,
                           std::span<const double> x, std::span<double> out_f,
                           std::span<double> out_df) {
#if defined(PROLATE_HAVE_AVX2)
    if (active_isa() == Isa::avx2) {
        detail::legendre_series_batch_avx2(coef, k0, x, out_f, out_df);
        return;
    }
#endif
    detail::legendre_series_batch_scalar(coef, k0, x, out_f, out_df);
}

void weighted_trig_sum(std::span<const double> w, std::span<const double> t,
                       double s, double& cos_out, double& sin_out) {
#if defined(PROLATE_HAVE_AVX2)
    // The vector sincos reduction is exact only for |s*t| well below 1e6.
    if (active_isa() == Isa::avx2 && std::abs(s) < 1e6) {
        detail::weighted_trig_sum_avx2(w, t, s, cos_out, sin_out);
        return;
    }
#endif
    detail::weighted_trig_sum_scalar(w, t, s, cos_out, sin_out);
}

}  // namespace prolate::kernels
