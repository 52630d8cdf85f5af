#pragma once

#include <stdexcept>
#include <string>

namespace eitrace {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Non-conforming matrix shapes.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Malformed or semantically inconsistent input file.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : Error(line ? what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"
                     : what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Input violates a structural axiom (category, functor, representation, complex).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Some endomorphism monoid of the category is not a group.
class NotEI : public Error {
public:
    using Error::Error;
};

class SingularZeta : public Error {
public:
    using Error::Error;
};

/// Two routes that must agree exactly did not. Indicates a bug.
class InternalMismatch : public Error {
public:
    using Error::Error;
};

class ResolutionCapExceeded : public Error {
public:
    using Error::Error;
};

class NotLoopFree : public Error {
public:
    using Error::Error;
};

class NotAGroup : public Error {
public:
    using Error::Error;
};

} // namespace eitrace
