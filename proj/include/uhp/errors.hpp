#pragma once

#include <stdexcept>
#include <string>

namespace uhp {

// Thrown for malformed inputs, broken invariants, or manifest/checkpoint
// validation failures. CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when a computation produces non-finite values or diverges.
// CLI maps this to exit code 3.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace uhp
