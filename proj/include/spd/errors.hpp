#pragma once

#include <stdexcept>
#include <string>

namespace spd {

// Base class for every error the library raises on purpose.  The CLI maps
// subclasses onto its exit-code contract (2 = schema, 3 = numerical,
// 4 = hypothesis violation).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- schema / input errors (exit code 2) ---------------------------------
class SchemaError : public Error {
public:
    using Error::Error;
};

// Malformed grid request (empty range, inverted bounds, bad point count).
class GridError : public SchemaError {
public:
    using SchemaError::SchemaError;
};

// --- numerical errors (exit code 3) ---------------------------------------
class NumericalError : public Error {
public:
    using Error::Error;
};

// Adaptive integration failed to reach tolerance within its evaluation cap.
class QuadratureFailure : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Requested integral is provably infinite (e.g. first moment of a stable tail).
class DivergentMoment : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Root bracketing failed: the function never changes sign on the probe range.
class NoBracket : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Iteration cap reached without meeting the convergence criterion.
class NoConvergence : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Argument outside the domain where the quantity is defined (e.g. saddle
// equation with -x/t below the range of phi' on (theta1, inf)).
class OutOfRange : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Query below/above the reachable range of a tabulated monotone envelope.
class RangeError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Inversion produced a value < -rel_tol: contour or quadrature failure.
class NegativeDensity : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Ladder exponent phi(lambda)/(lambda - theta0) evaluated at lambda = theta0.
class PoleAtTheta0 : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// --- hypothesis violations (exit code 4) -----------------------------------
// A mathematical hypothesis behind an asymptotic or envelope regime fails for
// the supplied model; the message names the failed hypothesis.
class HypothesisViolation : public Error {
public:
    using Error::Error;
};

class OutOfTimeRange : public HypothesisViolation {
public:
    using HypothesisViolation::HypothesisViolation;
};

}  // namespace spd
