#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gwalk {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands built over rings (or orders) with different variable counts.
class ArityMismatch : public Error {
public:
    using Error::Error;
};

/// A reduction ran past its configured step cap.
class StepCapExceeded : public Error {
public:
    using Error::Error;
};

class EmptyIdeal : public Error {
public:
    using Error::Error;
};

/// Order matrix is rank deficient, or a term order was required and not given.
class InvalidOrder : public Error {
public:
    using Error::Error;
};

/// A marked polynomial whose marking is not in its support, or was cancelled.
class InvalidMarking : public Error {
public:
    using Error::Error;
};

/// Walk input is not a marked reduced Gröbner basis over the source order.
class InvalidInputBasis : public Error {
public:
    using Error::Error;
};

/// The classical walk's start vector is not in the Gröbner cone of the input basis.
class W0NotInCone : public Error {
public:
    using Error::Error;
};

/// A normal form modulo a toric basis was not a monomial.
class NonMonomialNormalForm : public Error {
public:
    using Error::Error;
};

/// Text input could not be parsed. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : Error(format(what, line, column)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(const std::string& what, std::size_t line, std::size_t column) {
        if (line == 0) return what;
        return std::to_string(line) + ":" + std::to_string(column) + ": " + what;
    }

    std::size_t line_;
    std::size_t column_;
};

}  // namespace gwalk
