#pragma once

#include <stdexcept>
#include <string>

namespace subfield {

/// Raised when an exhaustive enumeration would exceed the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace subfield
