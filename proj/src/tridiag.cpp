#include "prolate/tridiag.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "prolate/errors.hpp"

namespace prolate {

namespace {

constexpr double kTiny = 1e-300;

std::uint64_t xorshift64(std::uint64_t& state) {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
}

std::vector<double> random_unit_vector(int N, std::uint64_t seed) {
    std::uint64_t state = seed ? seed : 0x9e3779b97f4a7c15ULL;
    // warm up past the low-entropy start
    for (int i = 0; i < 4; ++i) xorshift64(state);
    std::vector<double> v(N);
    double norm2 = 0.0;
    for (int i = 0; i < N; ++i) {
        const double u = (xorshift64(state) >> 11) * 0x1.0p-53;  // [0,1)
        v[i] = 2.0 * u - 1.0;
        norm2 += v[i] * v[i];
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& vi : v) vi *= inv;
    return v;
}

// (T - sigma I) x = rhs by Gaussian elimination with partial pivoting
// (LINPACK dgtsl scheme). Returns false on an exactly singular pivot.
bool solve_shifted(const SymTridiag& T, double sigma,
                   const std::vector<double>& rhs, std::vector<double>& x) {
    const int n = T.size();
    x = rhs;
    if (n == 1) {
        const double p = T.diag[0] - sigma;
        if (p == 0.0) return false;
        x[0] /= p;
        return true;
    }
    std::vector<double> c(n), d(n), e(n, 0.0);
    c[0] = T.diag[0] - sigma;
    d[0] = T.offdiag[0];
    for (int k = 1; k < n; ++k) {
        c[k] = T.offdiag[k - 1];
        d[k] = T.diag[k] - sigma;
        if (k < n - 1) e[k] = T.offdiag[k];
    }
    for (int k = 0; k < n - 1; ++k) {
        if (std::abs(c[k + 1]) >= std::abs(c[k])) {
            std::swap(c[k], c[k + 1]);
            std::swap(d[k], d[k + 1]);
            std::swap(e[k], e[k + 1]);
            std::swap(x[k], x[k + 1]);
        }
        if (c[k] == 0.0) return false;
        const double t = -c[k + 1] / c[k];
        c[k + 1] = d[k + 1] + t * d[k];
        d[k + 1] = e[k + 1] + t * e[k];
        e[k + 1] = 0.0;
        x[k + 1] += t * x[k];
    }
    if (c[n - 1] == 0.0) return false;
    x[n - 1] /= c[n - 1];
    x[n - 2] = (x[n - 2] - d[n - 2] * x[n - 1]) / c[n - 2];
    for (int k = n - 3; k >= 0; --k)
        x[k] = (x[k] - d[k] * x[k + 1] - e[k] * x[k + 2]) / c[k];
    return true;
}

double rayleigh_quotient(const SymTridiag& T, const std::vector<double>& v) {
    const int n = T.size();
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += T.diag[i] * v[i] * v[i];
    for (int i = 0; i + 1 < n; ++i) s += 2.0 * T.offdiag[i] * v[i] * v[i + 1];
    return s;
}

double residual_norm(const SymTridiag& T, const std::vector<double>& v,
                     double lam) {
    const int n = T.size();
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        double r = (T.diag[i] - lam) * v[i];
        if (i > 0) r += T.offdiag[i - 1] * v[i - 1];
        if (i + 1 < n) r += T.offdiag[i] * v[i + 1];
        s += r * r;
    }
    return std::sqrt(s);
}

}  // namespace

SymTridiag build_prolate_matrix(double c, Parity parity, int N) {
    if (!(c > 0.0)) throw domain_error("build_prolate_matrix: requires c > 0");
    if (N < 2) throw domain_error("build_prolate_matrix: requires N >= 2");
    const double c2 = c * c;
    SymTridiag T;
    T.diag.resize(N);
    T.offdiag.resize(N - 1);
    for (int i = 0; i < N; ++i) {
        const double k = 2.0 * i + (parity == Parity::odd ? 1.0 : 0.0);
        T.diag[i] =
            k * (k + 1) + c2 * (2 * k * (k + 1) - 1) / ((2 * k + 3) * (2 * k - 1));
        if (i < N - 1)
            T.offdiag[i] = c2 * (k + 2) * (k + 1) /
                           ((2 * k + 3) * std::sqrt((2 * k + 1) * (2 * k + 5)));
    }
    return T;
}

int sturm_count(const SymTridiag& T, double sigma) {
    const int n = T.size();
    int count = 0;
    double d = T.diag[0] - sigma;
    if (d > 0.0) ++count;
    for (int k = 1; k < n; ++k) {
        double prev = d;
        if (std::abs(prev) < kTiny) prev = std::copysign(kTiny, prev);
        const double b = T.offdiag[k - 1];
        d = (T.diag[k] - sigma) - (b * b) / prev;
        if (d > 0.0) ++count;
    }
    return count;
}

double sturm_bisect(const SymTridiag& T, double lo, double hi, int which,
                    double rel_tol) {
    const int n = T.size();
    if (which < 0 || which >= n)
        throw bracket_error("sturm_bisect: rank " + std::to_string(which) +
                            " out of range for size " + std::to_string(n));
    if (!(lo < hi)) throw bracket_error("sturm_bisect: requires lo < hi");
    // lambda_which > x  <=>  #eigenvalues(> x) >= n - which
    const int target = n - which;
    if (sturm_count(T, lo) < target || sturm_count(T, hi) >= target)
        throw bracket_error(
            "sturm_bisect: counts show no eigenvalue of rank " +
            std::to_string(which) + " in (" + std::to_string(lo) + ", " +
            std::to_string(hi) + "]");
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) break;  // bracket at floating resolution
        if (hi - lo <= rel_tol * std::abs(mid)) break;
        if (sturm_count(T, mid) >= target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

EigenPair inverse_power(const SymTridiag& T, double shift, std::uint64_t seed) {
    const int n = T.size();
    std::vector<double> v = random_unit_vector(n, seed);
    std::vector<double> x;
    double sigma = shift;
    double lam = shift;
    bool frozen = false;
    bool value_done = false;
    double residual = std::numeric_limits<double>::infinity();

    for (int it = 0; it < 20; ++it) {
        int retries = 0;
        while (!solve_shifted(T, sigma, v, x)) {
            // exactly singular shift; nudge it off the eigenvalue
            sigma += 1e-13 * (1.0 + std::abs(sigma));
            if (++retries > 3)
                throw convergence_error(
                    "inverse_power: repeated singular shifts");
        }
        double norm2 = 0.0;
        for (double xi : x) norm2 += xi * xi;
        const double inv = 1.0 / std::sqrt(norm2);
        double dot = 0.0;
        for (int i = 0; i < n; ++i) dot += x[i] * v[i];
        const double align = (dot < 0.0) ? -inv : inv;  // keep direction stable
        std::vector<double> vn(n);
        for (int i = 0; i < n; ++i) vn[i] = x[i] * align;

        const double lam_new = rayleigh_quotient(T, vn);
        const double dlam = std::abs(lam_new - lam);
        const double scale = std::max(1.0, std::abs(lam_new));
        if (!frozen && dlam < 1e-8 * scale) frozen = true;

        // The leading coordinate can be orders of magnitude below the vector
        // norm yet drives lambda_n; require it to stagnate too.
        const bool first_ok =
            std::abs(vn[0] - v[0]) <= 1e-11 * std::abs(vn[0]) + 1e-305;

        residual = residual_norm(T, vn, lam_new);
        // Value stagnation at the fixed point: the Rayleigh quotient of a
        // length-N sum jitters by ~sqrt(N) eps |value| between successive
        // iterates (it can settle into an exact two-cycle of that size).
        const double stag_tol = 1e-15 * scale * std::max(4.0, std::sqrt(n));
        const bool value_ok = residual <= 1e-12 * scale && dlam <= stag_tol;
        v = std::move(vn);
        lam = lam_new;
        if (value_ok && value_done && first_ok)
            return EigenPair{lam, std::move(v), residual};
        if (value_ok) value_done = true;
        if (!frozen) sigma = lam_new;
    }
    throw convergence_error(
        "inverse_power: no convergence in 20 iterations (residual " +
        std::to_string(residual) + ")");
}

}  // namespace prolate
