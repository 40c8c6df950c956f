// AVX2/FMA variants of the data-parallel kernels. Compiled with -mavx2 -mfma
// in this translation unit only; entered solely through the runtime dispatch
// in kernels.cpp.

#include <immintrin.h>

#include <cmath>
#include <span>

#include "prolate/kernels.hpp"

namespace prolate::kernels::detail {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(lo) + _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
}

// sin/cos of four doubles, |x| < ~1e6. Two-part Cody-Waite reduction by
// pi/2 (q < 2^20 keeps q*PIO2_1 exact), then the usual minimax kernels on
// [-pi/4, pi/4] with quadrant fix-up.
inline void sincos4(__m256d x, __m256d& sn, __m256d& cs) {
    const __m256d two_over_pi = _mm256_set1_pd(6.36619772367581382433e-01);
    const __m256d pio2_1 = _mm256_set1_pd(1.57079632673412561417e+00);
    const __m256d pio2_1t = _mm256_set1_pd(6.07710050650619224932e-11);

    __m256d q = _mm256_round_pd(_mm256_mul_pd(x, two_over_pi),
                                _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(q, pio2_1, x);
    r = _mm256_fnmadd_pd(q, pio2_1t, r);

    // Quadrant index: add 1.5*2^52 so the integer lands in the low mantissa
    // bits (valid for |q| < 2^51), then mask the two low bits.
    const __m256d shifter = _mm256_set1_pd(6755399441055744.0);
    __m256i qi = _mm256_castpd_si256(_mm256_add_pd(q, shifter));
    __m256i k_and1 = _mm256_and_si256(qi, _mm256_set1_epi64x(1));
    __m256i k_and2 = _mm256_and_si256(qi, _mm256_set1_epi64x(2));
    __m256i k1_and2 = _mm256_and_si256(_mm256_add_epi64(qi, _mm256_set1_epi64x(1)),
                                       _mm256_set1_epi64x(2));
    const __m256i zero = _mm256_setzero_si256();
    __m256d swap_mask =
        _mm256_castsi256_pd(_mm256_cmpeq_epi64(k_and1, _mm256_set1_epi64x(1)));
    __m256d sin_neg =
        _mm256_castsi256_pd(_mm256_cmpeq_epi64(k_and2, _mm256_set1_epi64x(2)));
    __m256d cos_neg =
        _mm256_castsi256_pd(_mm256_cmpeq_epi64(k1_and2, _mm256_set1_epi64x(2)));
    (void)zero;

    __m256d z = _mm256_mul_pd(r, r);

    // sin kernel: r + r^3 (S1 + z (S2 + ... )).
    __m256d ps = _mm256_set1_pd(1.58969099521155010221e-10);
    ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(-2.50507602534068634195e-08));
    ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(2.75573137070700676789e-06));
    ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(-1.98412698298579493134e-04));
    ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(8.33333333332248946124e-03));
    ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(-1.66666666666666324348e-01));
    __m256d sin_r = _mm256_fmadd_pd(_mm256_mul_pd(ps, z), r, r);

    // cos kernel: 1 - z/2 + z^2 (C1 + z (C2 + ... )).
    __m256d pc = _mm256_set1_pd(-1.13596475577881948265e-11);
    pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(2.08757232129817482790e-09));
    pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(-2.75573143513906633035e-07));
    pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(2.48015872894767294178e-05));
    pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(-1.38888888888741095749e-03));
    pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(4.16666666666666019037e-02));
    __m256d cos_r = _mm256_fmadd_pd(_mm256_mul_pd(pc, z), z,
                                    _mm256_fnmadd_pd(z, _mm256_set1_pd(0.5),
                                                     _mm256_set1_pd(1.0)));

    __m256d s_base = _mm256_blendv_pd(sin_r, cos_r, swap_mask);
    __m256d c_base = _mm256_blendv_pd(cos_r, sin_r, swap_mask);
    const __m256d signbit = _mm256_set1_pd(-0.0);
    sn = _mm256_xor_pd(s_base, _mm256_and_pd(sin_neg, signbit));
    cs = _mm256_xor_pd(c_base, _mm256_and_pd(cos_neg, signbit));
}

}  // namespace

void legendre_series_batch_avx2(std::span<const double> coef, int k0,
                                std::span<const double> x,
                                std::span<double> out_f,
                                std::span<double> out_df) {
    const int m = static_cast<int>(coef.size());
    const bool want_d = !out_df.empty();
    const int k_max = (m == 0) ? -1 : k0 + 2 * (m - 1);
    const std::size_t nx = x.size();

    std::size_t j = 0;
    for (; j + 4 <= nx; j += 4) {
        __m256d t = _mm256_loadu_pd(x.data() + j);
        __m256d pm = _mm256_setzero_pd();
        __m256d p = _mm256_set1_pd(1.0);
        __m256d dm = _mm256_setzero_pd();
        __m256d d = _mm256_setzero_pd();
        __m256d s = _mm256_setzero_pd();
        __m256d ds = _mm256_setzero_pd();
        int idx = 0;
        for (int k = 0; k <= k_max; ++k) {
            if (((k ^ k0) & 1) == 0) {
                __m256d a = _mm256_set1_pd(coef[idx]);
                s = _mm256_fmadd_pd(a, p, s);
                ds = _mm256_fmadd_pd(a, d, ds);
                ++idx;
            }
            const double inv = 1.0 / (k + 1);
            __m256d c1 = _mm256_set1_pd((2 * k + 1) * inv);
            __m256d c2 = _mm256_set1_pd(k * inv);
            __m256d pn = _mm256_fmsub_pd(c1, _mm256_mul_pd(t, p),
                                         _mm256_mul_pd(c2, pm));
            __m256d dn = _mm256_fmadd_pd(_mm256_set1_pd(2.0 * k + 1.0), p, dm);
            pm = p;
            p = pn;
            dm = d;
            d = dn;
        }
        _mm256_storeu_pd(out_f.data() + j, s);
        if (want_d) _mm256_storeu_pd(out_df.data() + j, ds);
    }
    if (j < nx) {
        legendre_series_batch_scalar(
            coef, k0, x.subspan(j), out_f.subspan(j),
            want_d ? out_df.subspan(j) : std::span<double>{});
    }
}

void weighted_trig_sum_avx2(std::span<const double> w,
                            std::span<const double> t, double s,
                            double& cos_out, double& sin_out) {
    const std::size_t n = w.size();
    __m256d vs = _mm256_set1_pd(s);
    __m256d acc_c = _mm256_setzero_pd();
    __m256d acc_s = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        __m256d ph = _mm256_mul_pd(vs, _mm256_loadu_pd(t.data() + j));
        __m256d sn, cs;
        sincos4(ph, sn, cs);
        __m256d vw = _mm256_loadu_pd(w.data() + j);
        acc_c = _mm256_fmadd_pd(vw, cs, acc_c);
        acc_s = _mm256_fmadd_pd(vw, sn, acc_s);
    }
    double csum = hsum(acc_c);
    double ssum = hsum(acc_s);
    for (; j < n; ++j) {
        const double ph = s * t[j];
        csum += w[j] * std::cos(ph);
        ssum += w[j] * std::sin(ph);
    }
    cos_out = csum;
    sin_out = ssum;
}

}  // namespace prolate::kernels::detail
