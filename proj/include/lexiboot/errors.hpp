#pragma once

#include <stdexcept>
#include <string>

namespace lexiboot {

// Invalid sizes or parameter combinations in a run configuration.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Caller violated an operation's contract (empty candidate list, shape mismatch).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Communication measures are only defined on binary matrices.
class NotFrozenError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class FitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace lexiboot
