#pragma once

#include <stdexcept>
#include <string>

namespace biped {

/// Base of every failure raised by the library. `stage()` names the pipeline
/// stage ("dynamics", "integrate", "poincare", ...) that gave up.
class Error : public std::runtime_error {
public:
    Error(std::string stage, const std::string& message)
        : std::runtime_error(message), stage_(std::move(stage)) {}

    const std::string& stage() const noexcept { return stage_; }

    /// Short machine-readable kind, used in CLI error reports.
    virtual const char* kind() const noexcept { return "error"; }

private:
    std::string stage_;
};

/// Argument outside the domain of a formula (non-finite input, pole, ...).
class DomainError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "domain_error"; }
};

/// A documented precondition was violated by the caller.
class PreconditionError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "precondition_error"; }
};

/// Numerical procedure failed (no bracket, no convergence, ...).
class NumericalError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "numerical_error"; }
};

class IntegrationError : public NumericalError {
public:
    using NumericalError::NumericalError;
    const char* kind() const noexcept override { return "integration_error"; }
};

/// No accepted heelstrike before the integration horizon.
class NoHeelstrikeError : public NumericalError {
public:
    using NumericalError::NumericalError;
    const char* kind() const noexcept override { return "no_heelstrike"; }
};

/// Division by a quantity that vanishes (guard tangency, 1/theta, ...).
class SingularityError : public NumericalError {
public:
    using NumericalError::NumericalError;
    const char* kind() const noexcept override { return "singularity"; }
};

/// Spectrum of a 2x2 matrix is not of the form {1, rho} with rho real.
class StructureError : public NumericalError {
public:
    using NumericalError::NumericalError;
    const char* kind() const noexcept override { return "structure_error"; }
};

/// Problem is degenerate: rho == 1, or a fixed point requested where
/// fixed points are not isolated.
class DegeneracyError : public NumericalError {
public:
    using NumericalError::NumericalError;
    const char* kind() const noexcept override { return "degeneracy"; }
};

}  // namespace biped
