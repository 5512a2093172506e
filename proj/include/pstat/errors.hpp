#pragma once

#include <stdexcept>
#include <string>

namespace pstat {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two evaluation coordinates coincide (or a zero coordinate where the
// determinant formulas need nonzero ones).
class DistinctnessViolation : public Error {
public:
    using Error::Error;
};

// The requested operation has no implementation for this statistics kind.
class UnsupportedKind : public Error {
public:
    using Error::Error;
};

// Binary series operation on operands truncated at different orders.
class TruncationMismatch : public Error {
public:
    using Error::Error;
};

// Determinant ratio whose denominator has no usable lowest coefficient.
class DivisionInconsistency : public Error {
public:
    using Error::Error;
};

// Truncated grand canonical sum has not converged at the requested order.
class TruncationTail : public Error {
public:
    using Error::Error;
};

// Chemical potential bracket could not be established.
class BracketFailure : public Error {
public:
    using Error::Error;
};

// Malformed textual input (kind names, rationals, partitions).
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace pstat
