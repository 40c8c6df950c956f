#pragma once

#include <stdexcept>
#include <string>

namespace prolate {

// Thrown when numeric preconditions or argument domains are violated.
// The message names the violated hypothesis.
using domain_error = std::domain_error;

// Sturm bisection was asked for an eigenvalue outside the certified bracket.
struct bracket_error : std::runtime_error {
    explicit bracket_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An iteration (inverse power, Newton) failed to converge within its budget.
struct convergence_error : std::runtime_error {
    explicit convergence_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A Prüfer march left the open interval (-1,1); indicates a caller bug.
struct escape_error : std::runtime_error {
    explicit escape_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A computed quantity contradicts a structural identity it must satisfy.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace prolate
