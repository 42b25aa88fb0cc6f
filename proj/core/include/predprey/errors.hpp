#ifndef PREDPREY_ERRORS_HPP
#define PREDPREY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace predprey {

// Exit-code mapping used by the CLI: 2 = configuration, 3 = numerical,
// 4 = precondition (analysis requested outside its domain of validity).

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Coexistence condition Gamma - 2 mu > 2 gamma mu / nu failed.
struct NoCoexistenceError : PreconditionError {
    double lhs;  // Gamma - 2 mu
    double rhs;  // 2 gamma mu / nu
    NoCoexistenceError(double lhs_, double rhs_)
        : PreconditionError("no coexistence equilibrium: Gamma - 2*mu = " + std::to_string(lhs_) +
                            " must exceed 2*gamma*mu/nu = " + std::to_string(rhs_)),
          lhs(lhs_), rhs(rhs_) {}
};

}  // namespace predprey

#endif
