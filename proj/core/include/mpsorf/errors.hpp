#pragma once

#include <stdexcept>
#include <string>

namespace mpsorf {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A Moebius factor was evaluated at (or numerically on top of) its pole.
class PoleHit : public Error {
public:
    using Error::Error;
};

/// An input violated a documented invariant (grid size, disk membership, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A configuration file could not be parsed.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A boundary evaluation landed exactly on an atom of the measure.
class AtomCollision : public Error {
public:
    using Error::Error;
};

/// Too many density samples had to be clipped for the outer-function quadrature.
class NotSzego : public Error {
public:
    using Error::Error;
};

/// A Schur parameter reached the unit circle: the input behaves like a finite
/// Blaschke product and the algorithm terminates.
class FiniteBlaschkeDetected : public Error {
public:
    using Error::Error;
};

/// The function evaluator cannot supply the derivative order required to
/// resolve a repeated interpolation node.
class DerivativeUnavailable : public Error {
public:
    using Error::Error;
};

/// The discretized Gram matrix is numerically rank deficient.
class RankDeficient : public Error {
public:
    explicit RankDeficient(const std::string& what, int offending_k)
        : Error(what), k(offending_k) {}
    int k;
};

/// A change-of-basis linear system could not be solved.
class SolveFailure : public Error {
public:
    using Error::Error;
};

/// File output failed.
class IoError : public Error {
public:
    using Error::Error;
};

/// A Poisson-weighted quadrature was refused because the grid cannot resolve
/// the kernel (M (1 - |alpha_n|) < 50) and force mode is off.
class ResolutionRefused : public Error {
public:
    using Error::Error;
};

}  // namespace mpsorf
