#pragma once

#include <functional>
#include <vector>

#include "prolate/tridiag.hpp"

// Slow, independent reference computations used by tests and the verify
// harness only. Deliberately simple and 10-1000x slower than the main path;
// never called from library hot paths.

namespace prolate::oracle {

struct OracleConfig {
    double abs_tol = 1e-12;
    int max_depth = 48;  // <= 60
    int base_points = 16;
};

// Recursive interval bisection with fixed 16-point Gauss panels until the
// panel-pair disagreement drops below abs_tol. Throws on depth exhaustion.
double adaptive_integrate(const std::function<double(double)>& f, double lo,
                          double hi, const OracleConfig& cfg = {});

// All N eigenvalues, ascending, each by rank-indexed Sturm bisection from
// Gershgorin brackets. Test scale only (N <= 2000).
std::vector<double> full_spectrum(const SymTridiag& T, double rel_tol);

// Roots of the Legendre polynomial P_n (1 <= n <= 200), Newton from
// Chebyshev initial guesses, ascending.
std::vector<double> legendre_roots(int n);

}  // namespace prolate::oracle
