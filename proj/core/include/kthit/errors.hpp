#pragma once

#include <stdexcept>
#include <string>

namespace kthit {

// Base of every error raised by the library. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An input exceeds a configured size cap of an exponential routine.
class CapExceeded : public Error {
public:
    using Error::Error;
};

// An operation was called outside its documented precondition.
class PreconditionViolated : public Error {
public:
    using Error::Error;
};

// A root list is not a valid root of the host graph.
class InvalidRoot : public Error {
public:
    using Error::Error;
};

// A root list does not align one-to-one with the connected components.
class ComponentMismatch : public Error {
public:
    using Error::Error;
};

// find_anticomplete_pair was given a complete graph.
class IsClique : public Error {
public:
    using Error::Error;
};

// An exact big-integer value would exceed the configured bit budget.
class Overflow : public Error {
public:
    using Error::Error;
};

// A defensive check inside the kernelization pipeline failed.
class InvariantBroken : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}
    int line() const { return line_; }
    const std::string& reason() const { return reason_; }

private:
    int line_;
    std::string reason_;
};

}  // namespace kthit
