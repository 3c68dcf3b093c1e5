#pragma once

#include <stdexcept>

namespace pdtest {

// Base type for every error raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 64-bit coefficient arithmetic left the representable range. Raised instead
// of wrapping, so no verdict is ever computed from a corrupted value.
struct OverflowError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

// A diagonal entry differs from 1.
struct NotUnidiagonalError : Error {
    using Error::Error;
};

// Some a_ij + a_ji is not an integer.
struct NotTriangleIntegralError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

struct VertexOutOfRangeError : Error {
    using Error::Error;
};

// Pair inflation requested for a pair that carries no dotted edge.
struct NotDefinedError : Error {
    using Error::Error;
};

struct DisconnectedError : Error {
    using Error::Error;
};

// A brute-force enumeration would exceed its evaluation budget.
struct BudgetExceededError : Error {
    using Error::Error;
};

}  // namespace pdtest
