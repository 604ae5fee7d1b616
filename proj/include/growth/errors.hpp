#pragma once

#include <stdexcept>
#include <string>

namespace growth {

// Malformed input: bad parameter sets, unreadable or inconsistent data
// files. The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A numeric routine could not produce a result: no root in bracket,
// singular design matrix, integration blow-up. The CLI maps this to
// exit code 2.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace growth
