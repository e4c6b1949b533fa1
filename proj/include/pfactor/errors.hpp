#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pfactor {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or a violated precondition (bad element, cycle, wrong member...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// An enumeration hit its configured cap. No partial result is returned.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t cap, std::size_t partial)
      : Error(what + ": cap of " + std::to_string(cap) + " exceeded (" +
              std::to_string(partial) + " found before stopping)"),
        cap_(cap),
        partial_(partial) {}

  std::size_t cap() const { return cap_; }
  std::size_t partial_count() const { return partial_; }

 private:
  std::size_t cap_;
  std::size_t partial_;
};

/// A structural identity that must hold for every finite poset failed.
/// Always an implementation bug; never recoverable.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace pfactor
