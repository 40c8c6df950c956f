#pragma once

#include <vector>

#include "prolate/nodes.hpp"
#include "prolate/pswf.hpp"

namespace prolate {

struct PhiEval {
    double value = 0.0;
    double deriv = 0.0;
};

// The weight generator Phi~_n(t) = sum_k alpha_k Q_k(t) and its derivative,
// by direct series summation over the stored parity class. |t| < 1.
PhiEval phi_series(const PswfSolution& sol, double t);

// Quadrature weights W_j = -2 Phi~_n(t_j) / psi_n'(t_j) with every
// Phi~_n(t_j) from the direct series: O(n^2) total.
std::vector<double> weights_direct(const PswfSolution& sol,
                                   const NodeTable& table);

// Same weights in O(n): Phi~ seeded by series at t_min, Taylor-marched node
// to node through its ODE derivative recurrences (order M_phi), the last
// four positive nodes recomputed by series (the march loses accuracy near
// the endpoint), the negative side filled in by symmetry.
std::vector<double> weights_fast(const PswfSolution& sol,
                                 const NodeTable& table, int M_phi = 60);

// Build the rule at the c -> 0 surrogate (c = 1e-8) and return
//   max_j | w_j - 2 / ((P_n'(t_j))^2 (1 - t_j^2)) |,
// the deviation from the Gauss-Legendre weights the rule converges to.
double gauss_limit_check(int n);

}  // namespace prolate
