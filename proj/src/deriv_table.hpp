#pragma once

// Shared Taylor machinery for functions obeying the prolate ODE family
//   (1-t^2) u''(t) - 2t u'(t) + (chi - c^2 t^2) u(t) = -c^2 (g0 t + g1/3),
// whose derivatives of any order follow a five-term recurrence. psi_n is the
// homogeneous case (g0 = g1 = 0); the weight generator Phi~_n has
// g0 = alpha_0, g1 = alpha_1.

namespace prolate::detail {

inline void prolate_deriv_table(double c, double chi, double t, double f,
                                double df, double g0, double g1, int M,
                                double* row) {
    const double c2 = c * c;
    const double c2t2 = c2 * t * t;
    const double om = (1.0 - t) * (1.0 + t);
    row[0] = f;
    if (M >= 1) row[1] = df;
    if (M >= 2)
        row[2] = (2.0 * t * df - (chi - c2t2) * f - c2 * (g0 * t + g1 / 3.0)) / om;
    if (M >= 3)
        row[3] = (4.0 * t * row[2] - (chi - c2t2 - 2.0) * row[1] +
                  2.0 * c2 * t * row[0] - c2 * g0) /
                 om;
    // k-fold Leibniz differentiation of the ODE:
    // (1-t^2) u^(k+2) - 2(k+1) t u^(k+1) + (chi - k(k+1) - c^2 t^2) u^(k)
    //   - 2 c^2 k t u^(k-1) - c^2 k(k-1) u^(k-2) = 0   (k >= 2)
    for (int k = 2; k + 2 <= M; ++k) {
        row[k + 2] = (2.0 * (k + 1) * t * row[k + 1] -
                      (chi - k * (k + 1) - c2t2) * row[k] +
                      2.0 * c2 * k * t * row[k - 1] +
                      c2 * k * (k - 1) * row[k - 2]) /
                     om;
    }
}

// u(t+h) and u'(t+h) from the derivative row: the value uses orders 0..M,
// the derivative orders 1..M (one order lower, as a series in h).
inline void taylor_eval(const double* row, int M, double h, double* val,
                        double* der) {
    double hk = 1.0;
    double f = row[0];
    double df = (M >= 1) ? row[1] : 0.0;
    for (int k = 1; k <= M; ++k) {
        hk *= h / k;
        f += row[k] * hk;
        if (k + 1 <= M) df += row[k + 1] * hk;
    }
    if (val) *val = f;
    if (der) *der = df;
}

}  // namespace prolate::detail
