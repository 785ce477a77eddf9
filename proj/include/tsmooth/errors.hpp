#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tsmooth {

/// Malformed user input (problem files, germ specs, out-of-range parameters).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Polynomial text that does not match the grammar. `position` is a 0-based byte offset.
class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InvalidInput(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A coefficient that is not an exact rational (identifiers, scientific notation, ...).
class UnsupportedCoefficient : public ParseError {
 public:
  using ParseError::ParseError;
};

/// The quotient did not stabilize below the truncation cap; the ideal is (heuristically) not m-primary.
class NotFinite : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when (d, i) violates i > d, i.e. the triple (f, I, g) cannot satisfy I^ea(f) ⊆ I ∋ g.
class LemmaViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tsmooth
