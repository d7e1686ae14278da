// Error type shared by the whole library. The kind maps onto CLI exit codes.
#pragma once

#include <stdexcept>
#include <string>

namespace donaldson {

enum class ErrorKind {
    precondition,  // operation preconditions / domain errors
    validation,    // manifest or structure validation failures
    parse,         // malformed input files or expressions
    internal,      // broken invariants (bugs, corrupt records)
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace donaldson
