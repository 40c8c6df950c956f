// Command-line front end: build and serialize quadrature rules, evaluate
// prolate functions and their eigenvalues, and rerun the verification
// experiments.
//
// Exit codes: 0 ok, 1 verification failure, 2 bad input / precondition
// violation, 3 I/O failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "prolate/errors.hpp"
#include "prolate/pswf.hpp"
#include "prolate/quadrature.hpp"
#include "prolate/rule_io.hpp"
#include "verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitIo = 3;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17e", v);
    return buf;
}

int cmd_rule(double c, int n, const std::string& out,
             const std::string& format, std::uint64_t seed) {
    const prolate::QuadratureRule rule = prolate::build_rule(c, n, seed);
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out.empty()) {
        file.open(out, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open '" << out << "' for writing\n";
            return kExitIo;
        }
        os = &file;
    }
    if (format == "csv")
        prolate::write_rule_csv(rule, *os);
    else
        prolate::write_rule_json(rule, *os);
    os->flush();
    if (!*os) {
        std::cerr << "error: write to '" << out << "' failed\n";
        return kExitIo;
    }
    return kExitOk;
}

int cmd_eval(double c, int n, const std::vector<double>& xs,
             std::uint64_t seed) {
    const prolate::PswfSolution sol = prolate::solve(c, n, seed);
    std::printf("%-24s %-24s %-24s\n", "x", "psi_n(x)", "psi_n'(x)");
    for (double x : xs) {
        std::printf("%s %s %s\n", fmt17(x).c_str(),
                    fmt17(prolate::psi(sol, x)).c_str(),
                    fmt17(prolate::dpsi(sol, x)).c_str());
    }
    return kExitOk;
}

int cmd_lambda(double c, int n, std::uint64_t seed) {
    const prolate::LambdaValue lv =
        prolate::lambda(prolate::solve(c, n, seed));
    std::printf("|lambda_%d| = %.4e\n", n, lv.magnitude);
    std::printf("phase exponent = %d  (lambda = i^%d |lambda|)\n",
                lv.phase_exponent, n);
    return kExitOk;
}

int cmd_nselect(double c, double eps, std::uint64_t seed) {
    const int n1 = prolate::n_for_precision(c, eps, prolate::NRule::n1, seed);
    const int n2 = prolate::n2_for_precision(c, eps, seed);
    const int n3 = prolate::n_for_precision(c, eps, prolate::NRule::n3, seed);
    const int n4 = prolate::n_for_precision(c, eps, prolate::NRule::n4, seed);
    std::printf("%d %d %d %d\n", n1, n2, n3, n4);
    // n1 is paired with the eigenvalue of index n1+1 (tabulation convention)
    const double lam1 =
        prolate::lambda(prolate::solve(c, n1 + 1, seed)).magnitude;
    const double lam2 = prolate::lambda(prolate::solve(c, n2, seed)).magnitude;
    std::printf("|lambda_n1| = %.5e\n", lam1);
    std::printf("|lambda_n2| = %.5e\n", lam2);
    return kExitOk;
}

int cmd_verify(const std::string& name, double c, int n, double max_c,
               int jobs, std::uint64_t seed) {
    prolate_verify::VerifyOptions opt;
    opt.seed = seed;
    opt.jobs = jobs;
    opt.max_c = max_c;
    prolate_verify::Report report;
    if (name == "table90")
        report = prolate_verify::verify_table90(opt);
    else if (name == "table96")
        report = prolate_verify::verify_table96(opt);
    else if (name == "table178")
        report = prolate_verify::verify_table178(opt);
    else if (name == "exp1")
        report = prolate_verify::verify_exp1(c, n, opt);
    else if (name == "props")
        report = prolate_verify::verify_props(opt);
    else {
        std::cerr << "error: unknown verify target '" << name
                  << "' (expected table90|table96|table178|exp1|props)\n";
        return kExitBadInput;
    }
    prolate_verify::print_report(report, std::cout);
    return report.pass() ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "prolate: bandlimited quadrature rules and prolate spheroidal wave "
        "functions"};
    app.require_subcommand(1);

    std::uint64_t seed = 1;
    app.add_option("--seed", seed, "seed for the eigensolver start vector")
        ->capture_default_str();

    double c = 0.0, eps = 0.0, max_c = 7999.0;
    int n = 0, jobs = 1;
    std::string out, format = "csv", verify_name;
    std::vector<double> xs;

    CLI::App* rule = app.add_subcommand("rule", "build a quadrature rule");
    rule->add_option("--c", c, "band limit")->required();
    rule->add_option("--n", n, "rule order")->required();
    rule->add_option("--out", out, "output path (default: stdout)");
    rule->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    CLI::App* eval =
        app.add_subcommand("eval", "evaluate psi_n and psi_n' at points");
    eval->add_option("--c", c, "band limit")->required();
    eval->add_option("--n", n, "prolate index")->required();
    eval->add_option("--x", xs, "evaluation points in [-1,1]")
        ->required()
        ->delimiter(',');

    CLI::App* lam = app.add_subcommand("lambda", "eigenvalue magnitude");
    lam->add_option("--c", c, "band limit")->required();
    lam->add_option("--n", n, "prolate index")->required();

    CLI::App* nsel =
        app.add_subcommand("nselect", "order selection for a target accuracy");
    nsel->add_option("--c", c, "band limit")->required();
    nsel->add_option("--eps", eps, "target accuracy in (0,1)")->required();

    CLI::App* verify =
        app.add_subcommand("verify", "recompute published tables / properties");
    verify
        ->add_option("name", verify_name,
                     "table90|table96|table178|exp1|props")
        ->required();
    verify->add_option("--c", c, "band limit for exp1")->default_val(1000.0);
    verify->add_option("--n", n, "order for exp1")->default_val(682);
    verify->add_option("--max-c", max_c, "cap on table rows (runtime)")
        ->capture_default_str();
    verify->add_option("--jobs", jobs, "parallel table cells")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (rule->parsed()) return cmd_rule(c, n, out, format, seed);
        if (eval->parsed()) return cmd_eval(c, n, xs, seed);
        if (lam->parsed()) return cmd_lambda(c, n, seed);
        if (nsel->parsed()) return cmd_nselect(c, eps, seed);
        if (verify->parsed())
            return cmd_verify(verify_name, c, n, max_c, jobs, seed);
    } catch (const prolate::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
