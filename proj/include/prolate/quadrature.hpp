#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "prolate/pswf.hpp"

namespace prolate {

// A ready-to-use quadrature rule for bandlimited functions: the n roots of
// psi_n as nodes, the Phi~-based weights, plus lambda_n and chi_n carried
// along for error diagnostics.
struct QuadratureRule {
    double c = 0.0;
    int n = 0;
    std::vector<double> nodes;
    std::vector<double> weights;
    LambdaValue lam;
    double chi = 0.0;
};

// solve -> find_nodes -> weights_fast. Requires n > 2c/pi + 5 (the error
// bound's hypothesis); throws domain_error naming the hypothesis otherwise.
QuadratureRule build_rule(double c, int n, std::uint64_t seed = 1);

// sum_j W_j f(t_j); the complex variant is two real sums.
double integrate(const QuadratureRule& rule,
                 const std::function<double(double)>& f);
std::complex<double> integrate_complex(
    const QuadratureRule& rule,
    const std::function<std::complex<double>(double)>& f);

// Quadrature error on the m-th prolate function, m < n, solved at the same
// band limit: |exact - sum_j W_j psi_m(t_j)| with exact = lambda_m psi_m(0)
// (signed real) for even m and exact = 0 for odd m.
double delta_psi(const QuadratureRule& rule, int m, const PswfSolution& sol_m);

// Error on e^{i a c x}: |2 sin(ac)/(ac) - sum_j W_j e^{i c a t_j}|
// (the a = 0 limit of the exact integral is 2).
double exp_error(const QuadratureRule& rule, double a);

// Max of exp_error over a uniform grid of `points` values of a in
// [a_lo, a_hi] (endpoints included; a_lo == a_hi gives the single value).
double sweep_delta(const QuadratureRule& rule, double a_lo, double a_hi,
                   int points);

// The rigorous error bound |lambda_n| (24 log(1/|lambda_n|) + 6 chi_n).
// Requires c > 30 and n > 2c/pi + 5.
double error_bound(const QuadratureRule& rule);

}  // namespace prolate
