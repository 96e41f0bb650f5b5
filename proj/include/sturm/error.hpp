#pragma once

#include <stdexcept>
#include <string>

namespace sturm {

// Malformed input or a violated precondition.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A search hit its configured budget.
class ResourceCap : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sturm
