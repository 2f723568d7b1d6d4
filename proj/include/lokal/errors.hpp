#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lokal {

// Base of everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input (CLI exit code 2).
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at column " + std::to_string(position + 1)), position_(position) {}

  /// Zero-based character offset of the offending token.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

// A mathematical obstruction (CLI exit code 1).
class MathError : public Error {
 public:
  using Error::Error;
};

class NotPrimary : public MathError {
 public:
  NotPrimary(const std::string& what, std::string partial_diagram)
      : MathError(what), partial_diagram_(std::move(partial_diagram)) {}

  /// Vertices of the diagram reached before giving up, rendered as text.
  const std::string& partial_diagram() const noexcept { return partial_diagram_; }

 private:
  std::string partial_diagram_;
};

class InfiniteComplement : public MathError {
 public:
  using MathError::MathError;
};

class GenericityFailure : public MathError {
 public:
  using MathError::MathError;
};

class NonTermination : public MathError {
 public:
  using MathError::MathError;
};

}  // namespace lokal
