#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

// Verification harness: recomputes published tables and property suites and
// reports one PASS/FAIL line per check. Shared by the CLI `verify`
// subcommand and the acceptance test binary.

namespace prolate_verify {

struct CheckLine {
    bool pass = false;
    bool hard = true;  // false: warning channel (conjectured bounds)
    std::string text;
};

struct Report {
    std::string name;
    std::vector<CheckLine> lines;
    double seconds = 0.0;

    bool pass() const {
        for (const auto& l : lines)
            if (l.hard && !l.pass) return false;
        return true;
    }
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    int jobs = 1;
    double max_c = 7999.0;  // rows with c >= 8000 are opt-in
};

// c = 40, n = 41 weight table: values to 1e-11 relative, O(n^2) vs O(n)
// algorithm agreement to 1e-13 per entry.
Report verify_table96(const VerifyOptions& opt = {});

// c = 50, n = 40 quadrature-error table: exact integrals to 1e-4 relative,
// errors against the double-precision column, rigorous bound (hard) and
// conjectured |lambda_n| cap (warning).
Report verify_table90(const VerifyOptions& opt = {});

// Order-selection table: exact integer agreement of n1..n4 and 1e-3
// relative agreement of the two eigenvalue columns, rows with c <= max_c.
Report verify_table178(const VerifyOptions& opt = {});

// Exponential integration sweeps at (c, n), plus a mid-decay order chosen by
// scanning for 1e-13 < |lambda| < 1e-7.
Report verify_exp1(double c, int n, const VerifyOptions& opt = {});

// Property suites: orthonormality, root counts, node symmetry, weight sum /
// positivity / oracle equivalence, Gauss limit, integral-operator residual,
// eigensolver vs full-spectrum oracle.
Report verify_props(const VerifyOptions& opt = {});

// Eigenvalue magnitude anchors (four published values).
Report verify_lambdas(const VerifyOptions& opt = {});

// Rule-construction wall time vs order (logged, not a gate).
Report verify_perf(const VerifyOptions& opt = {});

void print_report(const Report& report, std::ostream& os);

}  // namespace prolate_verify
