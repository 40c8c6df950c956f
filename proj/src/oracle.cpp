#include "prolate/oracle.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "prolate/errors.hpp"

namespace prolate::oracle {

namespace {

// P_n(x) and P_n'(x) by the plain recurrence (local on purpose: the oracle
// shares no code with the library evaluation paths it checks).
void legendre_pair(int n, double x, double& p, double& dp) {
    double pm = 1.0, pk = x;
    if (n == 0) {
        p = 1.0;
        dp = 0.0;
        return;
    }
    for (int k = 1; k < n; ++k) {
        const double pn = ((2 * k + 1) * x * pk - k * pm) / (k + 1);
        pm = pk;
        pk = pn;
    }
    p = pk;
    dp = n * (x * pk - pm) / (x * x - 1.0);
}

struct Panel {
    double nodes[16];
    double weights[16];
};

// 16-point Gauss panel, self-hosted from legendre_roots at first use.
const Panel& gauss16() {
    static const Panel panel = [] {
        Panel p;
        const std::vector<double> roots = legendre_roots(16);
        for (int i = 0; i < 16; ++i) {
            double v, dv;
            legendre_pair(16, roots[i], v, dv);
            p.nodes[i] = roots[i];
            p.weights[i] = 2.0 / ((1.0 - roots[i] * roots[i]) * dv * dv);
        }
        return p;
    }();
    return panel;
}

double gauss_panel(const std::function<double(double)>& f, double a, double b) {
    const Panel& p = gauss16();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 16; ++i) s += p.weights[i] * f(mid + half * p.nodes[i]);
    return s * half;
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double whole, double tol, int depth, int max_depth) {
    const double m = 0.5 * (a + b);
    const double left = gauss_panel(f, a, m);
    const double right = gauss_panel(f, m, b);
    if (std::abs(left + right - whole) < tol) return left + right;
    if (depth >= max_depth)
        throw convergence_error("adaptive_integrate: max depth " +
                                std::to_string(max_depth) + " exceeded");
    return adapt(f, a, m, left, 0.5 * tol, depth + 1, max_depth) +
           adapt(f, m, b, right, 0.5 * tol, depth + 1, max_depth);
}

// Same ratio-recurrence count as the library uses, written independently.
int count_above(const SymTridiag& T, double sigma) {
    const int n = T.size();
    int count = 0;
    double d = T.diag[0] - sigma;
    if (d > 0.0) ++count;
    for (int k = 1; k < n; ++k) {
        double prev = d;
        if (std::abs(prev) < 1e-300) prev = std::copysign(1e-300, prev);
        d = (T.diag[k] - sigma) - T.offdiag[k - 1] * T.offdiag[k - 1] / prev;
        if (d > 0.0) ++count;
    }
    return count;
}

}  // namespace

double adaptive_integrate(const std::function<double(double)>& f, double lo,
                          double hi, const OracleConfig& cfg) {
    if (!(lo < hi)) throw domain_error("adaptive_integrate: requires lo < hi");
    if (!(cfg.abs_tol > 0.0))
        throw domain_error("adaptive_integrate: requires abs_tol > 0");
    if (cfg.max_depth < 1 || cfg.max_depth > 60)
        throw domain_error("adaptive_integrate: requires 1 <= max_depth <= 60");
    return adapt(f, lo, hi, gauss_panel(f, lo, hi), cfg.abs_tol, 0,
                 cfg.max_depth);
}

std::vector<double> full_spectrum(const SymTridiag& T, double rel_tol) {
    const int n = T.size();
    if (n > 2000)
        throw domain_error("full_spectrum: test-scale only (N <= 2000)");
    // Gershgorin bounds, padded by 1.
    double lo = T.diag[0], hi = T.diag[0];
    for (int i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(T.offdiag[i - 1]);
        if (i + 1 < n) r += std::abs(T.offdiag[i]);
        lo = std::min(lo, T.diag[i] - r);
        hi = std::max(hi, T.diag[i] + r);
    }
    lo -= 1.0;
    hi += 1.0;

    std::vector<double> eig(n);
    for (int r = 0; r < n; ++r) {
        double a = lo, b = hi;
        const int target = n - r;  // eigenvalue r is > x iff count(x) >= target
        for (int iter = 0; iter < 200; ++iter) {
            const double mid = 0.5 * (a + b);
            if (!(mid > a && mid < b)) break;
            if (b - a <= rel_tol * std::max(std::abs(mid), 1e-30)) break;
            if (count_above(T, mid) >= target)
                a = mid;
            else
                b = mid;
        }
        eig[r] = 0.5 * (a + b);
    }
    return eig;
}

std::vector<double> legendre_roots(int n) {
    if (n < 1 || n > 200)
        throw domain_error("legendre_roots: requires 1 <= n <= 200");
    std::vector<double> roots(n);
    for (int i = 1; i <= n; ++i) {
        // Chebyshev-angle initial guess, ascending in i.
        double x = -std::cos(std::numbers::pi * (i - 0.25) / (n + 0.5));
        for (int it = 0; it < 60; ++it) {
            double p, dp;
            legendre_pair(n, x, p, dp);
            const double step = p / dp;
            x -= step;
            if (std::abs(step) < 1e-15) break;
        }
        roots[i - 1] = x;
    }
    return roots;
}

}  // namespace prolate::oracle
