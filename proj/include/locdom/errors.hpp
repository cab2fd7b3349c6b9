#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace locdom {

/// Caller passed something outside an operation's precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal invariant failed. Seeing one means either a bug or a
/// falsified theorem; both are worth a bug report.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class DisconnectedError : public std::domain_error {
public:
    DisconnectedError() : std::domain_error("graph is disconnected") {}
};

/// Parameters are valid but the requested operation has no answer for them
/// (e.g. a closed formula outside the range where it is known).
class UnsupportedError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace locdom
