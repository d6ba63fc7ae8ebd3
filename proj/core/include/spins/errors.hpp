#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace spins {

/// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Domain endpoints invalid (a >= b) or interval count < 1.
class InvalidDomainError : public Error {
public:
    using Error::Error;
};

/// Mismatched array sizes between knots, values, or derivative records.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Point outside [a, b].
class OutOfDomainError : public Error {
public:
    using Error::Error;
};

/// Derivative order above the polynomial degree.
class OrderError : public Error {
public:
    using Error::Error;
};

/// Knot geometry makes a clamped construction ill-posed
/// (near-equal end-slope responses or a singular end-matching system).
class DegenerateGeometryError : public Error {
public:
    using Error::Error;
};

/// Jacobian condition estimate above 1e14 inside a Newton solve.
class SingularSystemError : public Error {
public:
    using Error::Error;
};

/// Newton ran out of iterations; carries the best iterate seen.
class NoConvergenceError : public Error {
public:
    NoConvergenceError(const std::string& what, std::vector<double> best, double residual)
        : Error(what), best_iterate(std::move(best)), best_residual(residual) {}

    std::vector<double> best_iterate;
    double best_residual;
};

/// Loss (or another probed callable) returned a non-finite value.
class EvaluationError : public Error {
public:
    using Error::Error;
};

/// The linear system for the alpha sensitivities is singular
/// (dF/dv and dF/dw both vanish at an endpoint).
class SingularSensitivityError : public Error {
public:
    using Error::Error;
};

/// Requested norm or metric cannot be formed (e.g. exact solution has
/// near-zero norm in a relative error).
class DivisionGuardError : public Error {
public:
    using Error::Error;
};

}  // namespace spins
