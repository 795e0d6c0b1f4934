#pragma once

#include <stdexcept>
#include <string>

namespace coxext {

// Bad input: malformed descriptors, out-of-range parameters, caps exceeded.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : DomainError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Numerical failure that is not the caller's fault, e.g. a root finder
// running out of iterations.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A hard internal invariant was violated (oracle mismatch, non-palindromic
// histogram, ...). Callers should treat this as a verification failure.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace coxext
