#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace superperm {

// Bad argument or value outside the supported domain.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed TSPLIB text. line() is 1-based, 0 when the problem is not tied
// to a single line (e.g. premature end of file).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A tour that is not a Hamiltonian circuit of the expected shape.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Request exceeds what an algorithm can handle (e.g. exact DP on large N).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace superperm
