#pragma once

#include <stdexcept>
#include <string>

namespace zcz {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated (bad modulus, exponent out of
// range, invalid divisor, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// The requested object is too large for exact 64-bit index arithmetic.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

// Two sequences that must share period and modulus do not.
class MismatchError : public Error {
public:
    using Error::Error;
};

// A sequence or profile file could not be parsed.
class ParseError : public Error {
public:
    using Error::Error;
};

// Filesystem-level failure (unreadable/unwritable path).
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace zcz
