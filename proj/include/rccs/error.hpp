#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rccs {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, std::size_t offset)
        : Error(message + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Malformed structured input (JSON, trace files).
class InputError : public Error {
public:
    using Error::Error;
};

class NotCoherent : public Error {
public:
    using Error::Error;
};

class ReplayError : public Error {
public:
    ReplayError(const std::string& message, std::size_t step)
        : Error("step " + std::to_string(step) + ": " + message), step_(step) {}
    std::size_t step() const { return step_; }

private:
    std::size_t step_;
};

class UnsupportedContext : public Error {
public:
    using Error::Error;
};

class NotSinglyLabelled : public Error {
public:
    using Error::Error;
};

/// Internal invariant breach while computing an address; indicates a bug.
class AddressFailure : public Error {
public:
    using Error::Error;
};

class TauEventInConfig : public Error {
public:
    using Error::Error;
};

class CapacityExceeded : public Error {
public:
    using Error::Error;
};

} // namespace rccs
