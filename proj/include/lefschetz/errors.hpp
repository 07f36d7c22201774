#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lefschetz {

// Mismatched or non-square shapes.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input outside the mathematical domain of an operation (zero to factor,
// non-prime characteristic, vanishing pivot, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Work bound exceeded (minor enumeration, Artinian degree cap, sweep caps).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Operation not available for this kind of input.
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NotArtinianError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace lefschetz
