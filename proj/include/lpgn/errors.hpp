#pragma once

#include <stdexcept>
#include <string>

namespace lpgn {

/// Raised when an input violates an operation's precondition.
class ValidationError : public std::invalid_argument {
public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a query falls outside the range the classification covers
/// (for instance an L^1 target space in the representability oracle).
class OutOfScopeError : public std::domain_error {
public:
  explicit OutOfScopeError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace lpgn
