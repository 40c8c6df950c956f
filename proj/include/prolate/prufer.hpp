#pragma once

namespace prolate {

// Coefficients of the Prüfer phase equations for one (c, chi) pair.
// Requires chi > c^2 so that f is real on all of (-1,1).
struct PruferCoeffs {
    double c = 0.0;
    double chi = 0.0;
};

// f(t) = sqrt((chi - c^2 t^2) / (1 - t^2)) for |t| < 1.
double f_eval(const PruferCoeffs& pc, double t);

// v(t) = (t/(1-t^2) + c^2 t/(chi - c^2 t^2)) / 2 for |t| < 1.
double v_eval(const PruferCoeffs& pc, double t);

// March the inverse-phase ODE  s'(eta) = 1 / (f(s) + v(s) sin(2 eta))
// from s(eta0) = s0 to eta1 with the fixed-step second-order Runge-Kutta
// scheme (the stated number of steps). Any intermediate s outside
// (-1+1e-12, 1-1e-12) throws escape_error: it indicates a caller bug.
double rk2_march(const PruferCoeffs& pc, double eta0, double s0, double eta1,
                 int steps);

}  // namespace prolate
