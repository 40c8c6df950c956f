#pragma once

#include <cstdint>
#include <vector>

namespace prolate {

// Symmetric tridiagonal matrix: diag has N entries, offdiag N-1.
struct SymTridiag {
    std::vector<double> diag;
    std::vector<double> offdiag;

    int size() const { return static_cast<int>(diag.size()); }
};

enum class Parity { even, odd };

// N x N truncation of the infinite prolate coefficient matrix restricted to
// one parity class; row i corresponds to Legendre index k = 2i (even) or
// k = 2i+1 (odd). Entries:
//   A_{k,k}   = k(k+1) + c^2 (2k(k+1)-1) / ((2k+3)(2k-1))
//   A_{k,k+2} = c^2 (k+2)(k+1) / ((2k+3) sqrt((2k+1)(2k+5)))
SymTridiag build_prolate_matrix(double c, Parity parity, int N);

// Number of eigenvalues of T strictly greater than sigma, via the scaled
// Sturm ratio recurrence d_k = (a_k - sigma) - b_k^2 / d_{k-1} (immune to
// the overflow of the raw characteristic-polynomial sequence).
int sturm_count(const SymTridiag& T, double sigma);

// Bisect for the eigenvalue of 0-based rank `which` counted from the
// smallest. The Sturm counts must certify that it lies in (lo, hi];
// otherwise a bracket_error is thrown. Returns the midpoint of the final
// bracket, of width <= rel_tol * |midpoint|.
double sturm_bisect(const SymTridiag& T, double lo, double hi, int which,
                    double rel_tol);

struct EigenPair {
    double value = 0.0;
    std::vector<double> vector;  // unit Euclidean norm
    double residual = 0.0;       // ||T v - value v||_2
};

// Shifted inverse power iteration started from a deterministic pseudorandom
// unit vector (xorshift generator, given seed). The shift must be closer to
// the target eigenvalue than to any other. Each iteration solves the shifted
// tridiagonal system by elimination with partial pivoting in O(N). Converges
// cubically; throws convergence_error after 20 iterations without meeting
// residual <= 1e-12 max(1,|value|) and value stagnation.
EigenPair inverse_power(const SymTridiag& T, double shift,
                        std::uint64_t seed = 1);

}  // namespace prolate
