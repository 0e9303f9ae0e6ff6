#pragma once
#include <stdexcept>
#include <string>

namespace e7kit {

// Raised when a request exceeds a pinned enumeration budget.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace e7kit
