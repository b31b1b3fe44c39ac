#pragma once

#include <stdexcept>
#include <string>

namespace toricwhb {

/// Malformed or contract-violating input supplied by the caller.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// An internal consistency check failed. Always a bug.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/// A computation would exceed its configured budget.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace toricwhb
