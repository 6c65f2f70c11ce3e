#pragma once

#include <stdexcept>
#include <string>

namespace wfbench {

// Malformed input: bad JSON, bad matrix, unknown labels. CLI exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Distance matrix breaks symmetry, zero diagonal or non-negativity.
class StructuralError : public InputError {
 public:
  using InputError::InputError;
};

// A caller broke an operation's precondition.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Enumeration would exceed a configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Filesystem failure while persisting results.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wfbench
