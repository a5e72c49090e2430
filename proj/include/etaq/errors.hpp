#pragma once

#include <stdexcept>
#include <string>

namespace etaq {

/// Base class for all etaq errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands live over different coefficient rings.
struct ModulusMismatch : Error {
    using Error::Error;
};

/// Constant term is not a unit, so the series cannot be inverted.
/// Usually signals a mis-specified modulus (e.g. constant term 5 mod 625).
struct NonInvertibleError : Error {
    using Error::Error;
};

/// A table or expansion is too short for the requested scan; the message
/// states the required truncation.
struct TruncationError : Error {
    using Error::Error;
};

/// An eta-quotient whose leading q-power is not an integer.
struct FractionalExponentError : Error {
    using Error::Error;
};

/// Malformed textual input; the message names the offending token.
struct ParseError : Error {
    using Error::Error;
};

} // namespace etaq
