#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dnacode {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands of an element-wise or matrix operation disagree in length/shape.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input: bad base character, bad bit string, bad file shape.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Invalid code parameters (n, k, parity matrix shape or entries).
class ConstructionError : public Error {
public:
    using Error::Error;
};

/// Unknown built-in code name.
class LookupError : public Error {
public:
    using Error::Error;
};

/// A brute-force operation would exceed its enumeration limit.
class BudgetError : public Error {
public:
    using Error::Error;
};

/// Base/byte framing does not line up (length not a multiple of 4).
class FramingError : public Error {
public:
    using Error::Error;
};

/// A user-supplied table or object failed validation.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Invalid channel error model for the word it is applied to.
class ModelError : public Error {
public:
    using Error::Error;
};

}  // namespace dnacode
