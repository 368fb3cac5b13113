#pragma once

#include <stdexcept>
#include <string>

namespace stieltjes {

// Pole of Gamma/Beta hit (z a non-positive integer). Thrown instead of
// returning inf/NaN so parameter sweeps fail loudly.
class pole_error : public std::domain_error {
public:
    explicit pole_error(const std::string& msg) : std::domain_error(msg) {}
};

// Argument on the branch cut [1, inf) of 2F1.
class cut_error : public std::domain_error {
public:
    explicit cut_error(const std::string& msg) : std::domain_error(msg) {}
};

// Integral or series failed to converge within budget.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Requested norm/integral does not exist for the given parameters.
class integrability_error : public std::domain_error {
public:
    explicit integrability_error(const std::string& msg) : std::domain_error(msg) {}
};

// Operator-norm query outside the boundedness region.
class unbounded_operator_error : public std::domain_error {
public:
    explicit unbounded_operator_error(const std::string& msg) : std::domain_error(msg) {}
};

}  // namespace stieltjes
