#include "prolate/legendre.hpp"

#include <cmath>
#include <string>

#include "prolate/errors.hpp"

namespace prolate {

namespace {

// Upward recurrence shared by P and Q; only the order-0/1 seeds differ.
void recur_values(double x, double y0, double y1, std::vector<double>& values) {
    const int k_max = static_cast<int>(values.size()) - 1;
    values[0] = y0;
    if (k_max >= 1) values[1] = y1;
    for (int k = 1; k < k_max; ++k)
        values[k + 1] = ((2 * k + 1) * x * values[k] - k * values[k - 1]) / (k + 1);
}

// (1-x^2) y_k' = k (y_{k-1} - x y_k), valid for k >= 1 for both families.
void recur_derivs(double x, const std::vector<double>& values, double d0,
                  std::vector<double>& derivs) {
    const int k_max = static_cast<int>(values.size()) - 1;
    const double one_minus_x2 = (1.0 - x) * (1.0 + x);
    derivs[0] = d0;
    for (int k = 1; k <= k_max; ++k)
        derivs[k] = k * (values[k - 1] - x * values[k]) / one_minus_x2;
}

}  // namespace

LegendreEval eval_P(int k_max, double x) {
    if (k_max < 0) throw domain_error("eval_P: requires k_max >= 0");
    if (std::abs(x) > 1.0)
        throw domain_error("eval_P: requires |x| <= 1 (got x=" +
                           std::to_string(x) + ")");
    LegendreEval out;
    out.values.resize(k_max + 1);
    out.derivs.resize(k_max + 1);
    recur_values(x, 1.0, x, out.values);

    if (std::abs(x) == 1.0) {
        // P_k'(+-1) = (+-1)^{k-1} k(k+1)/2, the limit of the derivative
        // relation at the endpoint.
        for (int k = 0; k <= k_max; ++k) {
            double sign = (x > 0.0 || k % 2 == 1) ? 1.0 : -1.0;
            out.derivs[k] = sign * 0.5 * k * (k + 1);
        }
    } else {
        recur_derivs(x, out.values, 0.0, out.derivs);
    }
    return out;
}

LegendreEval eval_Q(int k_max, double x) {
    if (k_max < 0) throw domain_error("eval_Q: requires k_max >= 0");
    if (std::abs(x) > 1.0 - 1e-14)
        throw domain_error("eval_Q: requires |x| <= 1 - 1e-14 (got x=" +
                           std::to_string(x) + ")");
    LegendreEval out;
    out.values.resize(k_max + 1);
    out.derivs.resize(k_max + 1);
    const double q0 = std::atanh(x);  // (1/2) log((1+x)/(1-x))
    recur_values(x, q0, x * q0 - 1.0, out.values);
    recur_derivs(x, out.values, 1.0 / ((1.0 - x) * (1.0 + x)), out.derivs);
    return out;
}

double normalize_factor(int k) {
    if (k < 0) throw domain_error("normalize_factor: requires k >= 0");
    return std::sqrt(k + 0.5);
}

}  // namespace prolate
