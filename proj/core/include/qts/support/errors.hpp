#pragma once

#include <stdexcept>
#include <string>

namespace qts {

// Work required would exceed a configured enumeration/dimension budget.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// A square matrix turned out to be singular where an inverse was required.
class singular_error : public std::runtime_error {
 public:
  explicit singular_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qts
