#pragma once

#include <stdexcept>
#include <string>

namespace hyperlambert {

/// Argument outside the open domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Two points that must be distinct compare equal.
class CoincidentPoints : public std::invalid_argument {
public:
    CoincidentPoints() : std::invalid_argument("points coincide") {}
};

/// Absolute ratio requested for a quadruple with a repeated point.
class DegenerateQuadruple : public std::invalid_argument {
public:
    DegenerateQuadruple() : std::invalid_argument("quadruple has coincident points") {}
};

class InsufficientSamples : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A sampled inequality or identity did not hold. Carries the offending
/// parameter and the signed residual.
class VerificationFailure : public std::runtime_error {
public:
    VerificationFailure(std::string what, double r, double residual)
        : std::runtime_error(std::move(what) + " at r=" + std::to_string(r) +
                             " residual=" + std::to_string(residual)),
          r_(r), residual_(residual) {}

    double r() const noexcept { return r_; }
    double residual() const noexcept { return residual_; }

private:
    double r_;
    double residual_;
};

}  // namespace hyperlambert
