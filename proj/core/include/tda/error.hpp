#pragma once

#include <stdexcept>
#include <string>

namespace tda {

/// Caller supplied data or parameters that violate an operation's precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal invariant was found broken (a bug, not bad input).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tda
