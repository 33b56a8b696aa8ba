#pragma once

#include <stdexcept>
#include <string>

namespace mla {

// Bad shapes or violated preconditions on the caller's side.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Mathematically invalid input: failed Jacobi identity, degenerate form, ...
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& where, const std::string& what)
      : InvalidInput(where + ": " + what), location(where) {}
  std::string location;
};

// Two independent computations disagreed.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mla
