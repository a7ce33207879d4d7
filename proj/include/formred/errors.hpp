#pragma once

#include <stdexcept>
#include <string>

namespace formred {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (coefficient lists or polynomial syntax).
class ParseError : public Error {
public:
    using Error::Error;
};

/// The form has a root on the real projective line (including infinity).
class RealRootDetected : public Error {
public:
    using Error::Error;
};

/// A non-real root could not be matched with its complex conjugate.
class UnpairedRoot : public Error {
public:
    using Error::Error;
};

/// A quadratic or Hermitian form is not positive definite where it must be.
class NotPositiveDefinite : public Error {
public:
    using Error::Error;
};

/// A convex combination of boundary forms collapsed to a single boundary point.
class DegenerateCombination : public Error {
public:
    using Error::Error;
};

/// An iterative procedure hit its iteration cap or stagnated.
class ConvergenceFailure : public Error {
public:
    using Error::Error;
};

}  // namespace formred
