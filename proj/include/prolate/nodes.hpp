#pragma once

#include <vector>

#include "prolate/pswf.hpp"

namespace prolate {

// All n roots of psi_n in (-1,1), psi_n' at each root, and per-root Taylor
// derivative tables psi_n^(k)(t_j), k = 0..M, enabling O(1) re-evaluation
// of psi_n near the nodes.
struct NodeTable {
    std::vector<double> nodes;  // strictly increasing, length n
    std::vector<double> dpsi;   // psi_n'(t_j)
    std::vector<double> taylor; // row-major n x (M+1); row j holds psi^(k)(t_j)
    int order = 0;              // M
    int max_newton = 0;         // worst Newton iteration count observed

    int count() const { return static_cast<int>(nodes.size()); }
    double deriv(int j, int k) const { return taylor[j * (order + 1) + k]; }
};

// Root finding by the Prüfer leapfrog: RK2 march of the inverse phase ODE to
// a ~3-digit guess, Newton polish, Taylor tables carried node to node.
// Requires sol.chi > c^2 and n >= 1.
NodeTable find_nodes(const PswfSolution& sol, int M = 30);

// Taylor evaluation of psi_n (resp. psi_n') about the node nearest to x
// (binary search, ties to the left). x must lie within [t_1, t_n].
double interp_psi(const NodeTable& table, double x);
double interp_dpsi(const NodeTable& table, double x);

}  // namespace prolate
