#pragma once

#include <vector>

namespace prolate {

// Values and first derivatives of a Legendre family at one point,
// for all orders 0..k_max.
struct LegendreEval {
    std::vector<double> values;
    std::vector<double> derivs;
};

// Legendre polynomials P_0..P_kmax and their derivatives at x in [-1,1],
// by the upward three-term recurrence
//   (k+1) P_{k+1}(x) = (2k+1) x P_k(x) - k P_{k-1}(x).
// Derivatives via (1-x^2) P_k'(x) = k (P_{k-1}(x) - x P_k(x)), with the
// limit form P_k'(+-1) = (+-1)^{k-1} k(k+1)/2 at the endpoints.
LegendreEval eval_P(int k_max, double x);

// Legendre functions of the second kind Q_0..Q_kmax and derivatives,
// same recurrence, seeded by
//   Q_0(x) = atanh(x),  Q_1(x) = x*atanh(x) - 1.
// Restricted to |x| <= 1 - 1e-14 (logarithmic singularity at the endpoints;
// callers needing values nearer +-1 must use series summation upstream).
LegendreEval eval_Q(int k_max, double x);

// sqrt(k + 1/2), the factor turning P_k into the L2-normalized P̄_k.
double normalize_factor(int k);

}  // namespace prolate
