#pragma once

#include <stdexcept>
#include <string>

namespace stoptime {

/// Inputs that do not live on the same sample space / grid, or are structurally malformed.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An input failed the defining predicate a construction requires
/// (e.g. converting a random time that is not a stopping time).
class RejectedInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exhaustive enumeration would exceed the configured cap.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or unresolvable instance document.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace stoptime
