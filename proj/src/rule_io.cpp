#include "prolate/rule_io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "prolate/errors.hpp"

namespace prolate {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17e", v);
    return buf;
}

}  // namespace

void write_rule_csv(const QuadratureRule& rule, std::ostream& os) {
    os << "# prolate quadrature rule, version=1\n";
    os << "# c=" << fmt17(rule.c) << " n=" << rule.n
       << " lambda_abs=" << fmt17(rule.lam.magnitude)
       << " chi=" << fmt17(rule.chi) << "\n";
    os << "j,t,w\n";
    for (int j = 0; j < rule.n; ++j)
        os << (j + 1) << ',' << fmt17(rule.nodes[j]) << ','
           << fmt17(rule.weights[j]) << "\n";
}

void write_rule_json(const QuadratureRule& rule, std::ostream& os) {
    nlohmann::json j;
    j["version"] = 1;
    j["c"] = rule.c;
    j["n"] = rule.n;
    j["lambda_abs"] = rule.lam.magnitude;
    j["chi"] = rule.chi;
    j["nodes"] = rule.nodes;
    j["weights"] = rule.weights;
    os << j.dump(2) << "\n";
}

QuadratureRule read_rule_json(std::istream& is) {
    nlohmann::json j = nlohmann::json::parse(is);
    if (j.at("version").get<int>() != 1)
        throw domain_error("read_rule_json: unsupported version");
    QuadratureRule rule;
    rule.c = j.at("c").get<double>();
    rule.n = j.at("n").get<int>();
    rule.lam.magnitude = j.at("lambda_abs").get<double>();
    rule.lam.phase_exponent = rule.n % 4;
    rule.chi = j.at("chi").get<double>();
    rule.nodes = j.at("nodes").get<std::vector<double>>();
    rule.weights = j.at("weights").get<std::vector<double>>();
    if (static_cast<int>(rule.nodes.size()) != rule.n ||
        static_cast<int>(rule.weights.size()) != rule.n)
        throw domain_error("read_rule_json: row count does not match n");
    for (int i = 1; i < rule.n; ++i)
        if (!(rule.nodes[i] > rule.nodes[i - 1]))
            throw domain_error("read_rule_json: nodes not strictly increasing");
    return rule;
}

}  // namespace prolate
