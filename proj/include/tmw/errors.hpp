#pragma once

#include <stdexcept>
#include <string>

namespace tmw {

// Invalid user input: malformed graphs, unknown ids, out-of-range parameters.
// The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A broken internal invariant. The CLI maps this to exit code 2.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace tmw
