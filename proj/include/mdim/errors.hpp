#pragma once

#include <stdexcept>
#include <string>

namespace mdim {

// Malformed input: out-of-range ids, self-loops, unparsable files.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input is well-formed but outside the domain of the operation
// (disconnected graph for a metric query, non-2-tree for the classifier).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Caller broke a documented precondition.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Requested size exceeds what a fixed-capacity routine supports.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace mdim
