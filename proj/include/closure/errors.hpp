#pragma once

#include <stdexcept>
#include <string>

namespace closure {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operands live in different rings (or a monomial has the wrong length).
struct RingMismatchError : Error {
    explicit RingMismatchError(const std::string& msg) : Error(msg) {}
};

// A monomial exponent left the machine-representable range.
struct MonomialOverflowError : Error {
    explicit MonomialOverflowError(const std::string& msg) : Error(msg) {}
};

// A configured cap (degree, iterations, minor count, recursion depth) was hit.
struct CapExceededError : Error {
    explicit CapExceededError(const std::string& msg) : Error(msg) {}
};

// An internal mathematical invariant failed; indicates a bug or bad input
// that slipped past validation.
struct InvariantViolationError : Error {
    explicit InvariantViolationError(const std::string& msg) : Error(msg) {}
};

// Input ring was required to be reduced and is not.
struct NotReducedError : Error {
    explicit NotReducedError(const std::string& msg) : Error(msg) {}
};

// Bad arguments at the library surface (zero divisor ideal, zero input, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Text input could not be parsed.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int col_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " + std::to_string(col_) + ")"),
          line(line_), column(col_) {}
};

}  // namespace closure
