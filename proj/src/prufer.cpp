#include "prolate/prufer.hpp"

#include <cmath>
#include <string>

#include "prolate/errors.hpp"

namespace prolate {

namespace {

constexpr double kEdge = 1e-12;

void check_t(double t, const char* who) {
    if (!(std::abs(t) < 1.0))
        throw domain_error(std::string(who) + ": requires |t| < 1 (got t=" +
                           std::to_string(t) + ")");
}

void check_escape(double s) {
    if (!(s > -1.0 + kEdge && s < 1.0 - kEdge))
        throw escape_error("rk2_march: s left (-1,1) at s=" + std::to_string(s) +
                           " (wrong chi or eta interval?)");
}

}  // namespace

double f_eval(const PruferCoeffs& pc, double t) {
    check_t(t, "f_eval");
    const double rad =
        (pc.chi - pc.c * pc.c * t * t) / ((1.0 - t) * (1.0 + t));
    if (!(rad > 0.0))
        throw domain_error("f_eval: requires chi > c^2 t^2");
    return std::sqrt(rad);
}

double v_eval(const PruferCoeffs& pc, double t) {
    check_t(t, "v_eval");
    const double c2t2 = pc.c * pc.c * t * t;
    if (!(pc.chi > c2t2))
        throw domain_error("v_eval: requires chi > c^2 t^2");
    return 0.5 * (t / ((1.0 - t) * (1.0 + t)) + pc.c * pc.c * t / (pc.chi - c2t2));
}

double rk2_march(const PruferCoeffs& pc, double eta0, double s0, double eta1,
                 int steps) {
    if (steps < 1) throw domain_error("rk2_march: requires steps >= 1");
    check_escape(s0);
    if (eta1 == eta0) return s0;

    const auto slope = [&pc](double eta, double s) {
        return 1.0 / (f_eval(pc, s) + v_eval(pc, s) * std::sin(2.0 * eta));
    };

    const double h = (eta1 - eta0) / steps;
    double y = s0;
    double k = h * slope(eta0, y);
    for (int i = 0; i < steps; ++i) {
        const double eta_next = eta0 + (i + 1) * h;
        const double trial = y + k;
        check_escape(trial);
        const double k_next = h * slope(eta_next, trial);
        y += 0.5 * (k + k_next);
        check_escape(y);
        k = k_next;
    }
    return y;
}

}  // namespace prolate
