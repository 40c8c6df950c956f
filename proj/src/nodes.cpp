#include "prolate/nodes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "deriv_table.hpp"
#include "prolate/errors.hpp"
#include "prolate/prufer.hpp"

namespace prolate {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNewtonStep = 1e-14;
constexpr int kNewtonMax = 10;

// Newton polish of a root guess; evaluates psi, psi' through `eval`, which
// writes (value, derivative) for a given t. The step is clamped to half the
// local inter-root gap pi/f(t) to prevent hopping to a neighbor root.
template <typename Eval>
double newton_polish(const PruferCoeffs& pc, double guess, Eval eval,
                     int& iters_out) {
    double t = guess;
    for (int it = 1; it <= kNewtonMax; ++it) {
        double f = 0.0, df = 0.0;
        eval(t, f, df);
        double step = -f / df;
        const double cap = 0.5 * kPi / f_eval(pc, t);
        if (std::abs(step) > cap) step = std::copysign(cap, step);
        t += step;
        if (std::abs(step) < kNewtonStep) {
            iters_out = std::max(iters_out, it);
            return t;
        }
    }
    throw convergence_error(
        "find_nodes: Newton did not reach 1e-14 steps in 10 iterations near t=" +
        std::to_string(guess));
}

}  // namespace

NodeTable find_nodes(const PswfSolution& sol, int M) {
    const double c = sol.c;
    const int n = sol.n;
    if (n < 1) throw domain_error("find_nodes: requires n >= 1");
    if (!(sol.chi > c * c))
        throw domain_error(
            "find_nodes: requires chi_n > c^2 (n below 2c/pi is unsupported)");
    if (M < 3) throw domain_error("find_nodes: requires M >= 3");

    const PruferCoeffs pc{c, sol.chi};
    NodeTable tab;
    tab.order = M;
    tab.nodes.resize(n);
    tab.dpsi.resize(n);
    tab.taylor.assign(static_cast<std::size_t>(n) * (M + 1), 0.0);

    const int m0 = n / 2;  // index of the smallest non-negative root

    // Step 1: t_min. Odd n has the exact root 0; even n marches the inverse
    // phase from s(pi n/2) = 0 across half a phase interval, then polishes
    // with the full Legendre sums.
    double t_min = 0.0;
    if (n % 2 == 0) {
        const double guess =
            rk2_march(pc, kPi * n / 2.0, 0.0, kPi * (n + 1) / 2.0, 20);
        t_min = newton_polish(pc, guess,
                              [&sol](double t, double& f, double& df) {
                                  f = psi(sol, t);
                                  df = dpsi(sol, t);
                              },
                              tab.max_newton);
    }
    tab.nodes[m0] = t_min;

    // Step 2: psi'(t_min) and the derivative table row at t_min.
    const double p_min = psi(sol, t_min);
    const double d_min = dpsi(sol, t_min);
    tab.dpsi[m0] = d_min;
    detail::prolate_deriv_table(c, sol.chi, t_min, p_min, d_min, 0.0, 0.0, M,
                                &tab.taylor[static_cast<std::size_t>(m0) * (M + 1)]);

    // Step 3: leapfrog to each next positive root; Newton evaluates psi via
    // the Taylor row of the previous node.
    for (int j = m0; j + 1 < n; ++j) {
        const double tj = tab.nodes[j];
        const double* row = &tab.taylor[static_cast<std::size_t>(j) * (M + 1)];
        const int i1 = j + 1;  // one-based index of the current node
        const double guess =
            rk2_march(pc, kPi * (i1 - 0.5), tj, kPi * (i1 + 0.5), 20);
        const double tj1 =
            newton_polish(pc, guess,
                          [row, M, tj](double t, double& f, double& df) {
                              detail::taylor_eval(row, M, t - tj, &f, &df);
                          },
                          tab.max_newton);
        if (!(tj1 > tj) || tj1 - tj < 1e-13)
            throw convergence_error(
                "find_nodes: Newton collapsed onto the previous root near t=" +
                std::to_string(tj));
        double p1 = 0.0, d1 = 0.0;
        detail::taylor_eval(row, M, tj1 - tj, &p1, &d1);
        tab.nodes[j + 1] = tj1;
        tab.dpsi[j + 1] = d1;
        detail::prolate_deriv_table(
            c, sol.chi, tj1, p1, d1, 0.0, 0.0, M,
            &tab.taylor[static_cast<std::size_t>(j + 1) * (M + 1)]);
    }

    // Step 4: negative side by reflection; psi^(k)(-t) = (-1)^{n+k} psi^(k)(t).
    for (int j = 0; j < m0; ++j) {
        const int src = n - 1 - j;
        tab.nodes[j] = -tab.nodes[src];
        tab.dpsi[j] = ((n % 2 == 0) ? -1.0 : 1.0) * tab.dpsi[src];
        const double* from = &tab.taylor[static_cast<std::size_t>(src) * (M + 1)];
        double* to = &tab.taylor[static_cast<std::size_t>(j) * (M + 1)];
        for (int k = 0; k <= M; ++k) {
            const bool flip = ((n + k) % 2) != 0;
            to[k] = flip ? -from[k] : from[k];
        }
    }
    return tab;
}

namespace {

int nearest_node(const NodeTable& tab, double x) {
    const auto& ts = tab.nodes;
    if (x < ts.front() || x > ts.back())
        throw domain_error("interp: x outside the node span [t_1, t_n]");
    const auto it = std::lower_bound(ts.begin(), ts.end(), x);
    int j;
    if (it == ts.begin()) {
        j = 0;
    } else {
        const int hi = static_cast<int>(it - ts.begin());
        if (hi == tab.count()) {
            j = hi - 1;
        } else {
            const double d_lo = x - ts[hi - 1];
            const double d_hi = ts[hi] - x;
            j = (d_lo <= d_hi) ? hi - 1 : hi;  // ties go left
        }
    }
    // Never expand about the outermost nodes: their high-order derivative
    // entries are polluted by the ODE's singular second solution (amplified
    // like (k-1)!/((1-t) f)^k near the endpoints). The inner neighbor's row
    // covers the boundary gap at full radius -- the same evaluation the node
    // march already performs at machine precision.
    if (tab.count() >= 3) j = std::clamp(j, 1, tab.count() - 2);
    return j;
}

}  // namespace

double interp_psi(const NodeTable& tab, double x) {
    const int j = nearest_node(tab, x);
    double f = 0.0;
    detail::taylor_eval(&tab.taylor[static_cast<std::size_t>(j) * (tab.order + 1)],
                        tab.order, x - tab.nodes[j], &f, nullptr);
    return f;
}

double interp_dpsi(const NodeTable& tab, double x) {
    const int j = nearest_node(tab, x);
    double df = 0.0;
    detail::taylor_eval(&tab.taylor[static_cast<std::size_t>(j) * (tab.order + 1)],
                        tab.order, x - tab.nodes[j], nullptr, &df);
    return df;
}

}  // namespace prolate
