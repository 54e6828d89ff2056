#pragma once

#include <stdexcept>

namespace lsobstruct {

// Base type for every failure the library reports on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A polynomial with no terms where a nonempty one is required.
struct EmptyPolynomial : Error {
  using Error::Error;
};

// Input fails one of the staircase conditions; the message names the
// condition and the offending exponent.
struct NotLSpaceForm : Error {
  using Error::Error;
};

// Jump extraction on the trivial staircase (k = 0): the unknot has no jumps.
struct DegenerateSequence : Error {
  using Error::Error;
};

// Jump entries must be positive and start with 1.
struct InvalidJump : Error {
  using Error::Error;
};

// Staircase reconstruction produced a sequence failing its own re-extraction.
struct InconsistentParity : Error {
  using Error::Error;
};

// The interval machinery is defined for even staircase length only.
struct UnsupportedParity : Error {
  using Error::Error;
};

struct GenusMismatch : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

struct LabelOutOfRange : Error {
  using Error::Error;
};

// Surgery coefficient below the guaranteed L-space range 2g - 1.
struct SlopeTooSmall : Error {
  using Error::Error;
};

// Exact arithmetic left the 64-bit range.
struct OverflowError : Error {
  using Error::Error;
};

// Malformed knot JSON or census CSV; message carries line/field context.
struct ParseError : Error {
  using Error::Error;
};

// Unreadable input file or unwritable output.
struct IoError : Error {
  using Error::Error;
};

}  // namespace lsobstruct
