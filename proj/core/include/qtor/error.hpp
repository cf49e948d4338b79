#pragma once

#include <stdexcept>
#include <string>

namespace qtor {

// Caller handed in something outside an operation's domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An identity that must hold by construction failed: a bug, never user error.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qtor
