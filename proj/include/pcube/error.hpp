#pragma once

#include <stdexcept>
#include <string>

namespace pcube {

/// Malformed input files or builtin names.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search or enumeration refused to run, or stopped, because it would exceed
/// its configured size or time budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pcube
