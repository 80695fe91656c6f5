#pragma once

#include <stdexcept>
#include <string>

namespace tyw {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside the configured enumeration bounds.
class SizeError : public Error {
 public:
  using Error::Error;
};

// Input violating a mathematical precondition (not a subgroup, degenerate
// bicharacter, non-additive character, ...).
class InvariantError : public Error {
 public:
  using Error::Error;
};

// Malformed or inconsistent arguments.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// A computed object failed a structural check; signals a construction bug
// or injected fault rather than bad user input.
class StructuralError : public Error {
 public:
  using Error::Error;
};

}  // namespace tyw
