#pragma once

#include <stdexcept>

namespace whitdim {

// Caller violated a precondition (bad flag value, empty list, non-prime p, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed the configured candidate cap. The message
// names the cap so callers can report it.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal identity that must hold by theorem failed; indicates a
// transcription bug in a formula, never bad user input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace whitdim
