#pragma once

#include <stdexcept>
#include <string>

namespace tspread {

/// Raised when an operation is called outside its mathematical domain:
/// an index outside [1, n], a monomial that is not t-spread, a corner
/// pair in the wrong order, and so on.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// The max-filtered shadow used to define a Borel t-shadow minimum is empty.
class InfeasibleShadowError : public DomainError {
 public:
  explicit InfeasibleShadowError(const std::string& what) : DomainError(what) {}
};

/// An exact count or an enumeration left the representable range.
class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

/// A requested enumeration exceeds the configured cell budget.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tspread
