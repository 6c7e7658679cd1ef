#ifndef PQRS_ERRORS_HPP
#define PQRS_ERRORS_HPP

#include <stdexcept>

namespace pqrs {

// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input (rational strings, JSON payloads).
struct ParseError : Error {
  using Error::Error;
};

struct DivisionByZero : Error {
  using Error::Error;
};

// Exact Laurent-ring division was requested but no exact quotient exists.
// This always signals a misused identity, never a recoverable condition.
struct NotDivisible : Error {
  using Error::Error;
};

// A half-power of p or q was evaluated at a rational that is not a
// perfect square.
struct HalfPowerOfNonSquare : Error {
  using Error::Error;
};

struct ZeroBaseNegativeExponent : Error {
  using Error::Error;
};

struct PreconditionViolated : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

// A truncated Fock check was asked for with too small a basis to leave
// any interior block.
struct TruncationTooSmall : Error {
  using Error::Error;
};

// The imaginary residue of a continuous Hermite evaluation exceeded the
// diagnostic bound; indicates a broken binomial symmetry.
struct ImaginaryResidueTooLarge : Error {
  using Error::Error;
};

}  // namespace pqrs

#endif
