#pragma once

#include <stdexcept>
#include <string>

namespace tetra {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller violated an operation precondition (bad index range, wrong class, ...).
class UsageError : public Error {
public:
    using Error::Error;
};

/// A numerical procedure hit a singular or non-convergent situation.
class NumericalError : public Error {
public:
    using Error::Error;
};

class IndexRangeError : public UsageError {
public:
    using UsageError::UsageError;
};

class RangeGuardError : public UsageError {
public:
    using UsageError::UsageError;
};

class ClassMismatchError : public UsageError {
public:
    using UsageError::UsageError;
};

class PreconditionError : public UsageError {
public:
    using UsageError::UsageError;
};

class ZeroT2Error : public UsageError {
public:
    using UsageError::UsageError;
};

class AsymmetryError : public UsageError {
public:
    using UsageError::UsageError;
};

class DegenerateRootsError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class SingularMatrixError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class RemovableSingularityError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class DegenerateModeError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class DegenerateCouplingError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class SingularBoundaryError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class QuadratureError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class ConvergenceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace tetra
