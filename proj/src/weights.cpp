#include "prolate/weights.hpp"

#include <cmath>
#include <string>

#include "deriv_table.hpp"
#include "prolate/errors.hpp"
#include "prolate/legendre.hpp"

namespace prolate {

PhiEval phi_series(const PswfSolution& sol, double t) {
    if (!(std::abs(t) <= 1.0 - 1e-14))
        throw domain_error("phi_series: requires |t| <= 1 - 1e-14 (got t=" +
                           std::to_string(t) + ")");
    const int m = sol.trunc;
    const int k0 = sol.parity();
    const int k_max = k0 + 2 * (m - 1);
    const auto& a = sol.alpha;

    // Running Q_{k-1}, Q_k and derivatives; closed-form seeds, the usual
    // three-term recurrence upward, derivatives via
    // Q'_{k+1} = Q'_{k-1} + (2k+1) Q_k.
    const double ath = std::atanh(t);
    const double om = 1.0 / ((1.0 - t) * (1.0 + t));
    double qm = ath, q = t * ath - 1.0;       // Q_0, Q_1
    double dqm = om, dq = ath + t * om;       // Q_0', Q_1'

    double val = 0.0, der = 0.0;
    int idx = 0;
    if (k0 == 0) {
        val += a[0] * qm;
        der += a[0] * dqm;
        idx = 1;
    } else {
        val += a[0] * q;
        der += a[0] * dq;
        idx = 1;
    }
    for (int k = 1; k < k_max; ++k) {
        const double qn = ((2 * k + 1) * t * q - k * qm) / (k + 1);
        const double dqn = dqm + (2 * k + 1) * q;
        qm = q;
        q = qn;
        dqm = dq;
        dq = dqn;
        if ((((k + 1) ^ k0) & 1) == 0 && idx < m) {
            val += a[idx] * q;
            der += a[idx] * dq;
            ++idx;
        }
    }
    return PhiEval{val, der};
}

namespace {

void check_same(const PswfSolution& sol, const NodeTable& table,
                const char* who) {
    if (table.count() != sol.n)
        throw domain_error(std::string(who) +
                           ": node table does not match the solution order");
}

}  // namespace

std::vector<double> weights_direct(const PswfSolution& sol,
                                   const NodeTable& table) {
    check_same(sol, table, "weights_direct");
    const int n = sol.n;
    std::vector<double> w(n);
    for (int j = 0; j < n; ++j)
        w[j] = -2.0 * phi_series(sol, table.nodes[j]).value / table.dpsi[j];
    return w;
}

std::vector<double> weights_fast(const PswfSolution& sol,
                                 const NodeTable& table, int M_phi) {
    check_same(sol, table, "weights_fast");
    if (M_phi < 3) throw domain_error("weights_fast: requires M_phi >= 3");
    const int n = sol.n;
    const int m0 = n / 2;
    const double g0 = (sol.parity() == 0) ? sol.alpha[0] : 0.0;  // alpha_0
    const double g1 = (sol.parity() == 1) ? sol.alpha[0] : 0.0;  // alpha_1

    std::vector<double> phi(n, 0.0);

    // Step 1: seed at t_min by direct series (value and derivative).
    const PhiEval seed = phi_series(sol, table.nodes[m0]);
    phi[m0] = seed.value;

    // Step 2: Taylor-march Phi~ node to node. The last four positive nodes
    // are excluded: the march loses accuracy approaching the endpoint.
    std::vector<double> row(M_phi + 1);
    double cur_v = seed.value;
    double cur_d = seed.deriv;
    const int last_marched = n - 5;  // final target index of the march
    for (int j = m0; j + 1 <= last_marched; ++j) {
        detail::prolate_deriv_table(sol.c, sol.chi, table.nodes[j], cur_v,
                                    cur_d, g0, g1, M_phi, row.data());
        const double h = table.nodes[j + 1] - table.nodes[j];
        double nv = 0.0, nd = 0.0;
        detail::taylor_eval(row.data(), M_phi, h, &nv, &nd);
        phi[j + 1] = nv;
        cur_v = nv;
        cur_d = nd;
    }

    // Step 3: the last four positive nodes by direct series.
    for (int j = std::max(m0 + 1, n - 4); j < n; ++j)
        phi[j] = phi_series(sol, table.nodes[j]).value;

    // Step 4: negative side by the symmetry Phi~(-t) = (-1)^{n+1} Phi~(t).
    const double sym = (n % 2 == 0) ? -1.0 : 1.0;
    for (int j = 0; j < m0; ++j) phi[j] = sym * phi[n - 1 - j];

    // Step 5: weights.
    std::vector<double> w(n);
    for (int j = 0; j < n; ++j) w[j] = -2.0 * phi[j] / table.dpsi[j];
    return w;
}

double gauss_limit_check(int n) {
    if (n < 1) throw domain_error("gauss_limit_check: requires n >= 1");
    const PswfSolution sol = solve(1e-8, n);
    const NodeTable tab = find_nodes(sol);
    const std::vector<double> w = weights_fast(sol, tab);
    double dev = 0.0;
    for (int j = 0; j < n; ++j) {
        const double t = tab.nodes[j];
        const LegendreEval pe = eval_P(n, t);
        const double gauss =
            2.0 / (pe.derivs[n] * pe.derivs[n] * (1.0 - t) * (1.0 + t));
        dev = std::max(dev, std::abs(w[j] - gauss));
    }
    return dev;
}

}  // namespace prolate
