#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace solrec {

// Every failure surfaced by the library derives from Error. The C API maps
// each subclass onto a distinct status code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                ": " + message),
          line_(line), column_(column), message_(message) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

class IllegalMove : public Error {
public:
    using Error::Error;
};

class StateSpaceTooLarge : public Error {
public:
    StateSpaceTooLarge(double estimate, std::uint64_t limit)
        : Error("configuration space too large: estimated " + format(estimate) +
                " states, guard limit " + std::to_string(limit)),
          estimate_(estimate) {}

    double estimate() const { return estimate_; }

private:
    static std::string format(double v) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.4g", v);
        return buf;
    }
    double estimate_;
};

class ExactLimitExceeded : public Error {
public:
    using Error::Error;
};

class ExhaustiveLimitExceeded : public Error {
public:
    using Error::Error;
};

class UnreachableTarget : public Error {
public:
    using Error::Error;
};

class SolverInapplicable : public Error {
public:
    using Error::Error;
};

class InvalidDecomposition : public Error {
public:
    using Error::Error;
};

// Reduction input errors.
class PartitionInvalid : public Error {
public:
    using Error::Error;
};

class ImproperPrecoloring : public Error {
public:
    using Error::Error;
};

class EmptyList : public Error {
public:
    explicit EmptyList(int vertex)
        : Error("vertex " + std::to_string(vertex) + " has an empty color list"),
          vertex_(vertex) {}
    int vertex() const { return vertex_; }

private:
    int vertex_;
};

}  // namespace solrec
