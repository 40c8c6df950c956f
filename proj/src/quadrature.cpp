#include "prolate/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "prolate/errors.hpp"
#include "prolate/kernels.hpp"
#include "prolate/nodes.hpp"
#include "prolate/weights.hpp"

namespace prolate {

namespace {
constexpr double kPi = std::numbers::pi;
}

QuadratureRule build_rule(double c, int n, std::uint64_t seed) {
    if (!(c > 0.0)) throw domain_error("build_rule: requires c > 0");
    const double n_min = 2.0 * c / kPi + 5.0;
    if (!(n > n_min))
        throw domain_error("build_rule: requires n > 2c/pi + 5 = " +
                           std::to_string(n_min) + " (got n=" +
                           std::to_string(n) + ")");
    const PswfSolution sol = solve(c, n, seed);
    const NodeTable tab = find_nodes(sol);
    QuadratureRule rule;
    rule.c = c;
    rule.n = n;
    rule.weights = weights_fast(sol, tab);
    rule.nodes = tab.nodes;
    rule.lam = lambda(sol);
    rule.chi = sol.chi;
    return rule;
}

double integrate(const QuadratureRule& rule,
                 const std::function<double(double)>& f) {
    double s = 0.0;
    for (int j = 0; j < rule.n; ++j) s += rule.weights[j] * f(rule.nodes[j]);
    return s;
}

std::complex<double> integrate_complex(
    const QuadratureRule& rule,
    const std::function<std::complex<double>(double)>& f) {
    double re = 0.0, im = 0.0;
    for (int j = 0; j < rule.n; ++j) {
        const std::complex<double> v = f(rule.nodes[j]);
        re += rule.weights[j] * v.real();
        im += rule.weights[j] * v.imag();
    }
    return {re, im};
}

double delta_psi(const QuadratureRule& rule, int m, const PswfSolution& sol_m) {
    if (sol_m.c != rule.c)
        throw domain_error("delta_psi: solution band limit differs from rule");
    if (sol_m.n != m)
        throw domain_error("delta_psi: solution order differs from m");
    if (!(m >= 0 && m < rule.n))
        throw domain_error("delta_psi: requires 0 <= m < n");

    std::vector<double> vals(rule.n);
    psi_many(sol_m, rule.nodes, vals, {});
    double quad = 0.0;
    for (int j = 0; j < rule.n; ++j) quad += rule.weights[j] * vals[j];

    // Exact integral: lambda_m psi_m(0) for even m (lambda_m real, signed by
    // i^m); zero for odd m by parity.
    double exact = 0.0;
    if (m % 2 == 0) {
        const LambdaValue lm = lambda(sol_m);
        const double signed_lambda =
            (lm.phase_exponent == 0 ? 1.0 : -1.0) * lm.magnitude;
        exact = signed_lambda * psi(sol_m, 0.0);
    }
    return std::abs(exact - quad);
}

double exp_error(const QuadratureRule& rule, double a) {
    if (!(a >= 0.0)) throw domain_error("exp_error: requires a >= 0");
    const double ac = a * rule.c;
    const double exact = (ac == 0.0) ? 2.0 : 2.0 * std::sin(ac) / ac;
    double quad_re = 0.0, quad_im = 0.0;
    kernels::weighted_trig_sum(rule.weights, rule.nodes, ac, quad_re, quad_im);
    return std::hypot(exact - quad_re, quad_im);
}

double sweep_delta(const QuadratureRule& rule, double a_lo, double a_hi,
                   int points) {
    if (!(a_lo <= a_hi)) throw domain_error("sweep_delta: requires a_lo <= a_hi");
    if (points < 1) throw domain_error("sweep_delta: requires points >= 1");
    if (a_lo == a_hi || points == 1) return exp_error(rule, a_lo);
    double worst = 0.0;
    const double h = (a_hi - a_lo) / (points - 1);
    for (int i = 0; i < points; ++i)
        worst = std::max(worst, exp_error(rule, a_lo + i * h));
    return worst;
}

double error_bound(const QuadratureRule& rule) {
    if (!(rule.c > 30.0))
        throw domain_error("error_bound: requires c > 30 (got c=" +
                           std::to_string(rule.c) + ")");
    const double n_min = 2.0 * rule.c / kPi + 5.0;
    if (!(rule.n > n_min))
        throw domain_error("error_bound: requires n > 2c/pi + 5 = " +
                           std::to_string(n_min));
    const double mag = rule.lam.magnitude;
    if (mag == 0.0) return 0.0;
    return mag * (24.0 * std::log(1.0 / mag) + 6.0 * rule.chi);
}

}  // namespace prolate
