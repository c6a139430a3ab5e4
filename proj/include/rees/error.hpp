#ifndef REES_ERROR_HPP
#define REES_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rees {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Syntax errors from the polynomial / matrix-file parsers; pos is a
// 0-based offset into the offending text.
struct ParseError : Error {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"),
        pos(position) {}
};

struct RingMismatchError : Error {
  explicit RingMismatchError(const std::string& msg) : Error(msg) {}
};

// Pair/step budget of the Groebner engine exceeded.  Always an explicit
// failure, never a truncated answer.
struct ResourceLimitError : Error {
  explicit ResourceLimitError(const std::string& msg) : Error(msg) {}
};

// Violated preconditions: bad shapes, out-of-range minors, improper
// ideals, failed exact division and the like.
struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

}  // namespace rees

#endif
