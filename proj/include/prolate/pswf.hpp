#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace prolate {

// One solved prolate function: the eigenvalue chi of the prolate ODE and the
// truncated Legendre coefficient vector of psi_n. Only the parity class
// k = n mod 2 + 2i is stored (the other class is identically zero).
// beta holds the normalized-basis coefficients (unit Euclidean norm, sign
// fixed by psi_n(1) > 0); alpha caches beta[i]*sqrt(k+1/2).
struct PswfSolution {
    double c = 0.0;
    int n = 0;
    double chi = 0.0;
    std::vector<double> beta;
    std::vector<double> alpha;
    int trunc = 0;  // N, the stored class size

    int parity() const { return n & 1; }
};

// |lambda_n| together with the phase exponent n mod 4 encoding
// lambda_n = i^n |lambda_n|.
struct LambdaValue {
    double magnitude = 0.0;
    int phase_exponent = 0;
};

// Solve for (chi_n, beta^(n)) at band limit c: Sturm bisection to a low
// accuracy bracket midpoint, then shifted inverse power refinement.
// Truncation size N = ceil(1.1c + n + 1000).
PswfSolution solve(double c, int n, std::uint64_t seed = 1);

// psi_n(x) and psi_n'(x) for |x| <= 1, by the truncated Legendre sum.
double psi(const PswfSolution& sol, double x);
double dpsi(const PswfSolution& sol, double x);

// Batched evaluation at many points (routes through the kernels layer).
// out_dpsi may be empty to skip derivatives.
void psi_many(const PswfSolution& sol, std::span<const double> x,
              std::span<double> out_psi, std::span<double> out_dpsi);

// Eigenvalue of the bandlimited integral operator:
//   even n: lambda_n = beta_0 sqrt(2) / psi_n(0)         (purely real)
//   odd  n: lambda_n = i c sqrt(2/3) beta_1 / psi_n'(0)  (purely imaginary)
// The computed sign must agree with i^n |lambda_n|; a mismatch throws
// internal_error.
LambdaValue lambda(const PswfSolution& sol);

// mu_n = (c / 2 pi) |lambda_n|^2, always < 1.
double mu(const PswfSolution& sol);

// Upper bound xi(n,c) = 7056 c exp(-delta (1 - delta/(2 pi c))) on
// |lambda_n|, valid under c > 22, 3 < delta < pi c / 16 and
// n > 2c/pi + (2/pi^2) delta log(4 e pi c / delta).
double lambda_upper_bound(double c, int n, double delta);

enum class NRule { n1, n3, n4 };

// Order selectors for a target quadrature accuracy eps:
//   n1: largest n with |lambda_n| >= eps, i.e. one below the minimizing
//       index of the upward scan from floor(2c/pi). This is the convention
//       of the reference tabulation this library reproduces; it pairs n1
//       with the eigenvalue of index n1+1 (the first one under eps).
//   n3: floor(2c/pi + alpha/(2 pi) log(16 e c / alpha)),
//       alpha = (4 sqrt(6)/pi)(log(1/eps) + 3 log c + log(6^5 * 14340))
//   n4: floor(2c/pi + (10 + 3/2 log c + 1/2 log(1/eps)) log(c/2))
int n_for_precision(double c, double eps, NRule rule, std::uint64_t seed = 1);

// min { m >= 0 : |lambda_m| (24 log(1/|lambda_m|) + 6 chi_m) < eps },
// scanned upward from floor(2c/pi).
int n2_for_precision(double c, double eps, std::uint64_t seed = 1);

}  // namespace prolate
