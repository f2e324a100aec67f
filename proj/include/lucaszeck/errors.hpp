#pragma once

#include <stdexcept>
#include <string>

namespace lucaszeck {

/// A sequence term or intermediate left the representable integer range.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Input outside an operation's domain (bad index, bad recurrence, ...).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A documented size cap was exceeded (prefix length, enumeration depth).
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace lucaszeck
