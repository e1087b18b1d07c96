#pragma once

#include <stdexcept>
#include <string>

namespace rankone {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A geometric series fails its ratio test (|q| >= 1 where a sum is needed).
class DivergentError : public Error {
public:
    using Error::Error;
};

/// A canonicalized tail list exceeds the configured cap.
class TailCapError : public Error {
public:
    using Error::Error;
};

/// A norm or inner product was requested for a sequence outside l2.
class NotSquareSummableError : public Error {
public:
    using Error::Error;
};

/// Kernel-vector parameter lies on or outside the unit circle.
class OutOfDiscError : public Error {
public:
    using Error::Error;
};

/// Diagonal symbol violates its boundedness invariant.
class UnboundedDiagonalError : public Error {
public:
    using Error::Error;
};

/// Division by a diagonal with a vanishing entry.
class SingularDiagonalError : public Error {
public:
    using Error::Error;
};

/// The operator handed to a perturbation routine is not a structural
/// shift power.
class NotAnIsometryError : public Error {
public:
    using Error::Error;
};

/// Left-inverse construction requested for a perturbation with c = 0.
class NotLeftInvertibleError : public Error {
public:
    using Error::Error;
};

class NotUnitVectorError : public Error {
public:
    using Error::Error;
};

class NotUnimodularError : public Error {
public:
    using Error::Error;
};

/// Generic precondition failure (named argument in the message).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// One of the diagonal-criterion routines was handed data with zero
/// coordinates where nonzero ones are required.
class StandingAssumptionError : public Error {
public:
    using Error::Error;
};

/// Solve requested with r = 0.
class ZeroRError : public Error {
public:
    using Error::Error;
};

class NotIsometricParametersError : public Error {
public:
    using Error::Error;
};

/// Two closed-form routes for the same quantity disagreed.  Always a bug.
class InternalCheckError : public Error {
public:
    using Error::Error;
};

/// Structured-spec parsing failure; message names the offending field.
class SpecParseError : public Error {
public:
    using Error::Error;
};

/// Spec parsed but a payload violates a module precondition.
class ValidationError : public Error {
public:
    using Error::Error;
};

} // namespace rankone
