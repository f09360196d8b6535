#pragma once

#include <stdexcept>
#include <string>

namespace senslab {

/// Thrown when an argument violates an operation's precondition
/// (bad position, arity mismatch, family parameter out of range, ...).
class invalid_parameter : public std::invalid_argument {
  public:
    explicit invalid_parameter(const std::string& what)
        : std::invalid_argument(what) {}
};

/// Thrown when an operation would exceed a configured resource budget
/// (dense-table limit, orbit cap, enumeration budget).
class budget_exceeded : public std::runtime_error {
  public:
    explicit budget_exceeded(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace senslab
