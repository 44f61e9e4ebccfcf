#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symcay {

// Base for all library failures.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A construction hypothesis or operation precondition is violated.
// The message names the violated hypothesis.
class hypothesis_error : public error {
 public:
  using error::error;
};

// A configured resource bound (group order, vertex count, coset index)
// would be exceeded.
class bound_error : public error {
 public:
  using error::error;
};

// Text input could not be parsed; position is a 0-based byte offset.
class parse_error : public hypothesis_error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : hypothesis_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class io_error : public error {
 public:
  using error::error;
};

}  // namespace symcay
