#pragma once

#include <stdexcept>
#include <string>

namespace markov {

/// Raised when an argument falls outside an operation's domain
/// (empty sequence, zero partial quotient, bad range, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a request would exceed a configured resource limit.
class LimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace markov
