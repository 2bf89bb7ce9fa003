#pragma once

#include <stdexcept>
#include <string>

namespace orca {

// Bad data handed to the library: missing fields, malformed files,
// inconsistent dimensions between artifacts.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A call that violates an operation's stated contract (dimension
// mismatch against a config, out-of-range argument).
class contract_error : public std::logic_error {
 public:
  explicit contract_error(const std::string& msg) : std::logic_error(msg) {}
};

// Non-finite values where finite ones are required (divergence,
// overflow in a reduction).
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem-level failures: unreadable/unwritable paths, truncation.
class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace orca
