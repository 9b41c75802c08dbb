#pragma once

#include <stdexcept>

namespace rahman {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter point violates a nonvanishing requirement (zero denominator,
/// p1*p4 == p2*p3, vanishing compatibility denominator, ...).
class DegenerateParams : public Error {
public:
    using Error::Error;
};

/// Simplex size N < 1.
class InvalidSize : public Error {
public:
    using Error::Error;
};

/// A lattice point or chain state lies outside {(x,y): x,y >= 0, x+y <= N}.
class OutOfSimplex : public Error {
public:
    using Error::Error;
};

/// A denominator Pochhammer vanished while the matching numerator did not.
class VanishingDenominator : public Error {
public:
    using Error::Error;
};

/// The polynomial value matrix is singular at the given parameter point.
class SingularPolyMatrix : public Error {
public:
    using Error::Error;
};

/// Argument outside the documented range of a distribution or index map.
class RangeError : public Error {
public:
    using Error::Error;
};

/// A kernel row failed to sum to exactly 1. Always an implementation bug,
/// never a data condition: row stochasticity is an algebraic identity.
class StochasticityViolation : public Error {
public:
    using Error::Error;
};

/// The anchor system for a gauge normalization a*M + b*I is singular.
class GaugeUnsolvable : public Error {
public:
    using Error::Error;
};

/// Malformed textual input (rationals, matrices, config values).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Output stream or file could not be written.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace rahman
