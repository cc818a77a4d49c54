#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bipramsey {

// Argument outside its valid range (color index, vertex index).
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Inputs outside the hypotheses an operation is defined for.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Per-color list of the wrong length.
class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Instance too large for an exhaustive routine.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace bipramsey
