#pragma once

#include <stdexcept>
#include <string>

namespace nmzeno {

// Raised when a survival probability vanishes at a requested time, so that
// log|E|^2 (and therefore the effective decay rate) diverges.
class SurvivalZeroError : public std::domain_error {
public:
    SurvivalZeroError(const std::string& what, double tau)
        : std::domain_error(what), tau_(tau) {}

    double tau() const noexcept { return tau_; }

private:
    double tau_;
};

// Raised by the discretized-bath oracle when refining the mode count moves
// the result by more than the requested tolerance.
class NonConvergenceError : public std::runtime_error {
public:
    NonConvergenceError(const std::string& what, double change)
        : std::runtime_error(what), change_(change) {}

    double change() const noexcept { return change_; }

private:
    double change_;
};

}  // namespace nmzeno
