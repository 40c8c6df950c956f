#pragma once

#include <iosfwd>

#include "prolate/quadrature.hpp"

namespace prolate {

// CSV: two comment lines carrying (c, n, |lambda_n|, chi_n, version), then
// the header line "j,t,w" and n rows with 1-based j. Numeric fields are
// printed with "%.17e" so doubles round-trip exactly.
void write_rule_csv(const QuadratureRule& rule, std::ostream& os);

// JSON object {c, n, lambda_abs, chi, nodes[], weights[], version: 1};
// parse(serialize(rule)) reproduces the rule bit-exactly.
void write_rule_json(const QuadratureRule& rule, std::ostream& os);
QuadratureRule read_rule_json(std::istream& is);

}  // namespace prolate
