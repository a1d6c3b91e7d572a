#pragma once

#include <stdexcept>
#include <string>

namespace tfractal {

/// Malformed or out-of-contract arguments (bad vertex ids, violated
/// preconditions, unsupported parameters).
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text that could not be parsed; the message carries the field or line.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive search hit its node budget before finishing.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Composition inputs that do not share one equivalence class.
class equivalence_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace tfractal
