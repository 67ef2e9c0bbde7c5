#pragma once

#include <stdexcept>
#include <string>

namespace whphase {

// Dimension outside the domain an operation is defined on (d = 0, even d, ...).
class InvalidDimension : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input data failing a validation rule; message names the offending field.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Value inputs that break an operation's precondition (non-Hermitian, unnormalized, ...).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Well-formed input for which the requested construction is not defined.
class UnsupportedConfiguration : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace whphase
